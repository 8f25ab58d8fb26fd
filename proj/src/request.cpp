#include "adic/request.hpp"

#include <algorithm>
#include <map>

#include "adic/error.hpp"

namespace adic {

namespace {

using json::Json;

enum class FieldType { Series, Point, Subset, Ring, Convex, Int, SeriesList };

struct FieldSpec {
  const char* name;
  FieldType type;
  bool required;
};

const std::map<std::string, std::vector<FieldSpec>>& commandTable() {
  static const std::map<std::string, std::vector<FieldSpec>> table{
      {"eval", {{"f", FieldType::Series, true}, {"x", FieldType::Point, true},
                {"truncation", FieldType::Convex, false}}},
      {"classify", {{"x", FieldType::Point, true}}},
      {"member", {{"x", FieldType::Point, true}, {"subset", FieldType::Subset, true},
                  {"truncation", FieldType::Convex, false}}},
      {"closure", {{"x", FieldType::Point, true}, {"k", FieldType::Int, true}}},
      {"specializes", {{"x", FieldType::Point, true}, {"y", FieldType::Point, true},
                       {"trials", FieldType::Int, false}}},
      {"vertical", {{"y", FieldType::Point, true}}},
      {"horizontal", {{"x", FieldType::Point, true}, {"delta", FieldType::Convex, true},
                      {"truncation", FieldType::Convex, false}}},
      {"localize", {{"ring", FieldType::Ring, true}, {"numerators", FieldType::SeriesList, true},
                    {"denominator", FieldType::Series, true}}},
      {"power-bounded", {{"f", FieldType::Series, true}, {"ring", FieldType::Ring, true}}},
      {"top-nilpotent", {{"f", FieldType::Series, true}, {"ring", FieldType::Ring, true}}},
      {"continuity", {{"x", FieldType::Point, true}, {"truncation", FieldType::Convex, false},
                      {"samples", FieldType::SeriesList, false}}},
      {"nullstellensatz", {{"f", FieldType::Series, true}}},
      {"newton", {{"f", FieldType::Series, true}}},
  };
  return table;
}

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::SchemaError, what); }

ParamValue decode(FieldType type, const Json& j, Prime p, const std::string& where) {
  switch (type) {
    case FieldType::Series: return json::parseSeries(j, p, where);
    case FieldType::Point: return json::parsePoint(j, p, where);
    case FieldType::Subset: return json::parseSubset(j, p, where);
    case FieldType::Ring: return json::parseRing(j, p, where);
    case FieldType::Convex: return json::parseConvexSubgroup(j, where);
    case FieldType::Int: return json::parseInteger(j, where);
    case FieldType::SeriesList: return json::parseSeriesList(j, p, where);
  }
  schema(where + ": unsupported field type");
}

Json encode(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConvexSubgroup>) {
          return convexSubgroupName(x);
        } else if constexpr (std::is_same_v<T, long>) {
          return x;
        } else {
          return json::toJson(x);
        }
      },
      v);
}

Prime decodePrime(const Json* j, const RequestDefaults& defaults) {
  std::uint64_t value = 0;
  if (j) {
    if (!j->is_number_unsigned()) schema("prime: expected a positive integer");
    value = j->get<std::uint64_t>();
  } else if (defaults.prime) {
    value = *defaults.prime;
  } else {
    schema("missing field \"prime\" and no default prime configured");
  }
  if (!isPrime(value) || value >= (1ULL << 31)) schema("prime: " + std::to_string(value) + " is not a prime below 2^31");
  return Prime(value);
}

template <typename T>
const T& get(const Request& req, const std::string& key) {
  const ParamValue* v = req.find(key);
  if (!v) schema("params: missing field \"" + key + "\"");
  return std::get<T>(*v);
}

template <typename T>
std::optional<T> getOptional(const Request& req, const std::string& key) {
  const ParamValue* v = req.find(key);
  if (!v) return std::nullopt;
  return std::get<T>(*v);
}

SpvPoint spvParam(const Request& req) {
  return SpvPoint{get<PointDescriptor>(req, "x"),
                  getOptional<ConvexSubgroup>(req, "truncation").value_or(ConvexSubgroup::Full)};
}

Json valueJson(const std::optional<GroupValue>& v) {
  if (!v) return nullptr;
  return v->toString();
}

std::string residueFieldName(ResidueFieldKind k) {
  return k == ResidueFieldKind::AlgClosedPrime ? "Fp-bar" : "Fp-bar(t)";
}

Json classifyJson(const PointDescriptor& x) {
  const PointReport r = classify(x);
  return Json{{"type", r.typeTag},
              {"value_group", r.valueGroup.name()},
              {"residue_field", residueFieldName(r.residueField)},
              {"support", r.support == SupportKind::MaximalIdeal ? "maximal_ideal" : "zero_ideal"},
              {"closed", r.closed},
              {"in_d", r.inD}};
}

Json verdictJson(const BoundedVerdict& v) {
  Json out{{"status", verdictName(v.status)}, {"certificate", valueJson(v.certificate)}};
  if (v.witness) out["witness"] = json::toJson(*v.witness);
  return out;
}

Json localizedJson(const RingDescriptor& r) {
  Json q = nullptr;
  if (r.normExponent()) q = json::toJson(*r.normExponent());
  return Json{{"ring", json::toJson(r)},
              {"name", r.name()},
              {"norm_exponent", std::move(q)},
              {"ring_of_definition", r.ringOfDefinition()},
              {"ideal_of_definition", r.idealOfDefinition()}};
}

Json newtonJson(const TateSeries& f) {
  Json segments = Json::array();
  for (const NewtonSegment& s : newtonPolygon(f)) {
    segments.push_back(Json{{"slope", s.slope ? json::toJson(*s.slope) : Json("inf")},
                            {"multiplicity", s.multiplicity}});
  }
  return Json{{"segments", std::move(segments)}, {"weierstrass_degree", weierstrassDegree(f)}};
}

Json dispatch(const Request& req, std::uint64_t seed) {
  const std::string& c = req.command;
  if (c == "eval") return evaluate(get<TateSeries>(req, "f"), spvParam(req)).toString();
  if (c == "classify") return classifyJson(get<PointDescriptor>(req, "x"));
  if (c == "member") return member(spvParam(req), get<RationalSubset>(req, "subset"));
  if (c == "closure") {
    const long k = get<long>(req, "k");
    if (k < 1 || k > FqContext::kMaxDegree) fail(ErrorCode::InvalidArgument, "k must lie in [1, 8]");
    Json out = Json::array();
    for (const auto& y : closurePoints(get<PointDescriptor>(req, "x"), static_cast<int>(k))) {
      out.push_back(json::toJson(y));
    }
    return out;
  }
  if (c == "specializes") {
    const auto& x = get<PointDescriptor>(req, "x");
    const auto& y = get<PointDescriptor>(req, "y");
    Json out{{"specializes", specializes(x, y)}};
    if (auto trials = getOptional<long>(req, "trials")) {
      if (*trials < 1 || *trials > 1000000) fail(ErrorCode::InvalidArgument, "trials must lie in [1, 10^6]");
      const SamplingReport r = samplingSpecializationCheck(x, y, static_cast<int>(*trials), seed);
      out["sampling"] = Json{{"consistent", r.consistent},
                             {"trials_run", r.trialsRun},
                             {"counterexample", r.counterexample ? json::toJson(*r.counterexample) : Json()}};
    }
    return out;
  }
  if (c == "vertical") return json::toJson(verticalGenerization(get<PointDescriptor>(req, "y")));
  if (c == "horizontal") {
    const HorizontalSpecialization h = horizontalSpecialize(spvParam(req), get<ConvexSubgroup>(req, "delta"));
    return Json{{"point", json::toJson(h.point.base)},
                {"truncation", convexSubgroupName(h.point.truncation)},
                {"is_valuation", h.isValuation},
                {"continuous", h.continuous}};
  }
  if (c == "localize") {
    return localizedJson(localize(get<RingDescriptor>(req, "ring"), get<std::vector<TateSeries>>(req, "numerators"),
                                  get<TateSeries>(req, "denominator")));
  }
  if (c == "power-bounded") {
    return verdictJson(isPowerBounded(get<TateSeries>(req, "f"), get<RingDescriptor>(req, "ring")));
  }
  if (c == "top-nilpotent") {
    return verdictJson(isTopologicallyNilpotent(get<TateSeries>(req, "f"), get<RingDescriptor>(req, "ring")));
  }
  if (c == "continuity") {
    const auto samples =
        getOptional<std::vector<TateSeries>>(req, "samples").value_or(defaultContinuitySamples(req.prime));
    const ContinuityReport r = checkContinuity(spvParam(req), samples);
    return Json{{"cofinal", r.cofinal},
                {"bound_holds", r.boundHolds},
                {"verdict", continuityVerdictName(r.verdict)}};
  }
  if (c == "nullstellensatz") {
    const auto w = nullstellensatzWitness(get<TateSeries>(req, "f"));
    if (!w) return Json{{"witness", nullptr}, {"value", nullptr}};
    return Json{{"witness", json::toJson(w->first)}, {"value", w->second.toString()}};
  }
  if (c == "newton") return newtonJson(get<TateSeries>(req, "f"));
  schema("unknown command \"" + c + "\"");
}

Response errorResponse(ErrorCode code, const std::string& message) {
  const int status = code == ErrorCode::ParseError || code == ErrorCode::SchemaError ? 2 : 1;
  return Response{Json{{"ok", false}, {"error", Json{{"code", std::string(errorCodeName(code))}, {"message", message}}}},
                  status};
}

}  // namespace

const ParamValue* Request::find(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

Request parseRequest(std::string_view text, const RequestDefaults& defaults) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  json::checkObject(j, {"schema_version", "command", "prime", "seed", "params"}, {"command", "params"}, "request");
  Request req;
  if (j.contains("schema_version")) {
    if (j.at("schema_version") != kSchemaVersion) schema("schema_version: only version 1 is supported");
    req.explicitSchemaVersion = true;
  }
  if (!j.at("command").is_string()) schema("command: expected a string");
  req.command = j.at("command").get<std::string>();
  const auto& table = commandTable();
  const auto it = table.find(req.command);
  if (it == table.end()) schema("unknown command \"" + req.command + "\"");
  req.prime = decodePrime(j.contains("prime") ? &j.at("prime") : nullptr, defaults);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) schema("seed: expected a non-negative integer");
    req.seed = j.at("seed").get<std::uint64_t>();
  }
  const Json& params = j.at("params");
  if (!params.is_object()) schema("params: expected an object");
  for (const auto& item : params.items()) {
    const bool known = std::any_of(it->second.begin(), it->second.end(),
                                   [&](const FieldSpec& f) { return item.key() == f.name; });
    if (!known) schema("params: unknown field \"" + item.key() + "\" for " + req.command);
  }
  for (const FieldSpec& f : it->second) {
    if (!params.contains(f.name)) {
      if (f.required) schema("params: missing field \"" + std::string(f.name) + "\"");
      continue;
    }
    req.params.emplace_back(f.name, decode(f.type, params.at(f.name), req.prime, std::string("params.") + f.name));
  }
  return req;
}

std::string serializeRequest(const Request& req) {
  Json j;
  if (req.explicitSchemaVersion) j["schema_version"] = kSchemaVersion;
  j["command"] = req.command;
  j["prime"] = req.prime.value();
  if (req.seed) j["seed"] = *req.seed;
  Json params = Json::object();
  for (const auto& [k, v] : req.params) params[k] = encode(v);
  j["params"] = std::move(params);
  return j.dump();
}

Response runCommand(const Request& req, const RequestDefaults& defaults) {
  try {
    return Response{Json{{"ok", true}, {"result", dispatch(req, req.seed.value_or(defaults.seed))}}, 0};
  } catch (const Error& e) {
    return errorResponse(e.code(), e.what());
  }
}

Response runRequest(std::string_view text, const RequestDefaults& defaults) {
  try {
    return runCommand(parseRequest(text, defaults), defaults);
  } catch (const Error& e) {
    return errorResponse(e.code(), e.what());
  } catch (const std::exception& e) {
    return errorResponse(ErrorCode::InvalidArgument, e.what());
  }
}

std::string renderResponse(const Response& r, bool pretty) { return pretty ? r.body.dump(2) : r.body.dump(); }

}  // namespace adic
