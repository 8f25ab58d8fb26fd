#include "adic/json_io.hpp"

#include <algorithm>

#include "adic/error.hpp"

namespace adic::json {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  fail(ErrorCode::SchemaError, where + ": " + what);
}

std::uint64_t parseResidue(const Json& j, Prime p, const std::string& where) {
  const Rational c = parseRational(j, where);
  if (!isInteger(c) || c < 0 || c >= Rational(p.ul())) {
    schema(where, "expected a residue in [0, " + std::to_string(p.value()) + ")");
  }
  return c.get_num().get_ui();
}

std::string residueString(std::uint64_t c) { return std::to_string(c); }

std::shared_ptr<const FqContext> parseContext(const Json& j, Prime p, int k, const std::string& where) {
  if (!j.contains("modulus")) return FqContext::create(p, k);
  const Json& m = j.at("modulus");
  if (!m.is_array()) schema(where + ".modulus", "expected an array of residues");
  std::vector<std::uint64_t> coeffs;
  for (std::size_t i = 0; i < m.size(); ++i) {
    coeffs.push_back(parseResidue(m[i], p, where + ".modulus[" + std::to_string(i) + "]"));
  }
  if (coeffs.size() != static_cast<std::size_t>(k) + 1 || coeffs.back() != 1) {
    schema(where + ".modulus", "expected a monic polynomial of degree k, constant term first");
  }
  return FqContext::withModulus(p, std::move(coeffs));
}

std::pair<std::shared_ptr<const FqContext>, P1Point> parseLambda(const Json& j, Prime p,
                                                                  const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") schema(where, "expected \"inf\" or an object");
    return {FqContext::create(p, 1), P1Point::infinity()};
  }
  checkObject(j, {"k", "value", "modulus"}, {"k", "value"}, where);
  const long k = parseInteger(j.at("k"), where + ".k");
  if (k < 1 || k > FqContext::kMaxDegree) schema(where + ".k", "extension degree must lie in [1, 8]");
  auto ctx = parseContext(j, p, static_cast<int>(k), where);
  const Json& v = j.at("value");
  if (v.is_string() && v.get<std::string>() == "inf") return {ctx, P1Point::infinity()};
  if (v.is_array()) {
    if (v.size() != static_cast<std::size_t>(k)) schema(where + ".value", "expected k coordinates");
    std::vector<std::uint64_t> coords;
    for (std::size_t i = 0; i < v.size(); ++i) {
      coords.push_back(parseResidue(v[i], p, where + ".value[" + std::to_string(i) + "]"));
    }
    return {ctx, P1Point::finite(ctx->fromCoords(std::move(coords)))};
  }
  return {ctx, P1Point::finite(ctx->fromPrimeField(parseResidue(v, p, where + ".value")))};
}

Json lambdaJson(const FqContext& ctx, const P1Point& lambda) {
  const int k = ctx.degree();
  if (k == 1) {
    if (lambda.isInfinity()) return "inf";
    return Json{{"k", 1}, {"value", residueString(lambda.value().coords[0])}};
  }
  Json out{{"k", k}};
  if (lambda.isInfinity()) {
    out["value"] = "inf";
  } else {
    Json coords = Json::array();
    for (auto c : lambda.value().coords) coords.push_back(residueString(c));
    out["value"] = std::move(coords);
  }
  if (!(ctx == *FqContext::create(ctx.prime(), k))) {
    Json m = Json::array();
    for (auto c : ctx.modulus()) m.push_back(residueString(c));
    out["modulus"] = std::move(m);
  }
  return out;
}

}  // namespace

void checkObject(const Json& j, std::initializer_list<const char*> allowed,
                 std::initializer_list<const char*> required, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  for (const auto& item : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return item.key() == a; });
    if (!known) schema(where, "unknown field \"" + item.key() + "\"");
  }
  for (const char* r : required) {
    if (!j.contains(r)) schema(where, std::string("missing field \"") + r + "\"");
  }
}

Rational parseRational(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a rational as a string \"a/b\"");
  const auto x = adic::parseRational(j.get<std::string>());
  if (!x) schema(where, "malformed rational \"" + j.get<std::string>() + "\"");
  return *x;
}

Json toJson(const Rational& x) { return renderRational(x); }

long parseInteger(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<long>();
}

TateSeries parseSeries(const Json& j, Prime p, const std::string& where) {
  checkObject(j, {"coeffs", "tail_vp"}, {"coeffs"}, where);
  const Json& cs = j.at("coeffs");
  if (!cs.is_array()) schema(where + ".coeffs", "expected an array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    coeffs.push_back(parseRational(cs[i], where + ".coeffs[" + std::to_string(i) + "]"));
  }
  ExtInt tail = ExtInt::infinity();
  if (j.contains("tail_vp")) {
    const Json& t = j.at("tail_vp");
    if (t.is_string()) {
      if (t.get<std::string>() != "inf") schema(where + ".tail_vp", "expected an integer or \"inf\"");
    } else {
      tail = ExtInt(parseInteger(t, where + ".tail_vp"));
    }
  }
  return TateSeries(p, std::move(coeffs), tail);
}

Json toJson(const TateSeries& f) {
  Json cs = Json::array();
  for (const auto& c : f.coeffs()) cs.push_back(toJson(c));
  Json out{{"coeffs", std::move(cs)}};
  if (f.isPolynomial()) {
    out["tail_vp"] = "inf";
  } else {
    out["tail_vp"] = f.tailBound().value();
  }
  return out;
}

std::vector<TateSeries> parseSeriesList(const Json& j, Prime p, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of series");
  std::vector<TateSeries> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parseSeries(j[i], p, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json toJson(const std::vector<TateSeries>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(toJson(f));
  return out;
}

PointDescriptor parsePoint(const Json& j, Prime p, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    schema(where, "expected a point object with a \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "classical") {
    checkObject(j, {"kind", "alpha"}, {"alpha"}, where);
    return PointDescriptor::classical(p, parseRational(j.at("alpha"), where + ".alpha"));
  }
  if (kind == "disc") {
    checkObject(j, {"kind", "alpha", "q", "r"}, {"alpha"}, where);
    if (j.contains("q") == j.contains("r")) schema(where, "a disc needs exactly one of \"q\" and \"r\"");
    const Rational alpha = parseRational(j.at("alpha"), where + ".alpha");
    if (j.contains("q")) {
      return PointDescriptor::disc(p, alpha, Radius::pPower(parseRational(j.at("q"), where + ".q")));
    }
    return PointDescriptor::disc(p, alpha, Radius::plain(p, parseRational(j.at("r"), where + ".r")));
  }
  if (kind == "type5") {
    checkObject(j, {"kind", "alpha", "q", "lambda"}, {"alpha", "q", "lambda"}, where);
    auto [ctx, lambda] = parseLambda(j.at("lambda"), p, where + ".lambda");
    return PointDescriptor::type5(p, parseRational(j.at("alpha"), where + ".alpha"),
                                  parseRational(j.at("q"), where + ".q"), std::move(ctx), lambda);
  }
  schema(where + ".kind", "unknown point kind \"" + kind + "\"");
}

Json toJson(const PointDescriptor& x) {
  switch (x.kind()) {
    case PointKind::Classical:
      return Json{{"kind", "classical"}, {"alpha", toJson(x.center())}};
    case PointKind::Disc:
      if (x.radius().isPPower()) {
        return Json{{"kind", "disc"}, {"alpha", toJson(x.center())}, {"q", toJson(x.radius().exponent())}};
      }
      return Json{{"kind", "disc"}, {"alpha", toJson(x.center())}, {"r", toJson(x.radius().value())}};
    case PointKind::Type5:
      return Json{{"kind", "type5"},
                  {"alpha", toJson(x.center())},
                  {"q", toJson(x.radius().exponent())},
                  {"lambda", lambdaJson(*x.residueContext(), x.lambda())}};
  }
  return nullptr;
}

RationalSubset parseSubset(const Json& j, Prime p, const std::string& where) {
  checkObject(j, {"numerators", "denominator"}, {"numerators", "denominator"}, where);
  return RationalSubset{parseSeriesList(j.at("numerators"), p, where + ".numerators"),
                        parseSeries(j.at("denominator"), p, where + ".denominator"),
                        OpenStatus::Unchecked};
}

Json toJson(const RationalSubset& u) {
  return Json{{"numerators", toJson(u.numerators)}, {"denominator", toJson(u.denominator)}};
}

RingDescriptor parseRing(const Json& j, Prime p, const std::string& where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "tate_algebra") return RingDescriptor::tateAlgebra(p);
    if (name == "poly_ring") return RingDescriptor::polyRing(p);
    if (name == "formal_power_series") return RingDescriptor::formalPowerSeries(p);
    schema(where, "unknown ring \"" + name + "\"");
  }
  checkObject(j, {"kind", "base", "numerators", "denominator"}, {"kind", "base", "numerators", "denominator"},
              where);
  if (j.at("kind") != "localized") schema(where + ".kind", "expected \"localized\"");
  return localize(parseRing(j.at("base"), p, where + ".base"),
                  parseSeriesList(j.at("numerators"), p, where + ".numerators"),
                  parseSeries(j.at("denominator"), p, where + ".denominator"));
}

Json toJson(const RingDescriptor& r) {
  switch (r.kind()) {
    case RingKind::TateAlgebra: return "tate_algebra";
    case RingKind::PolyRing: return "poly_ring";
    case RingKind::FormalPowerSeries: return "formal_power_series";
    case RingKind::Localized:
      return Json{{"kind", "localized"},
                  {"base", toJson(r.base())},
                  {"numerators", toJson(r.numerators())},
                  {"denominator", toJson(r.denominator())}};
  }
  return nullptr;
}

ConvexSubgroup parseConvexSubgroup(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (auto d : {ConvexSubgroup::Trivial, ConvexSubgroup::SecondFactor, ConvexSubgroup::Full}) {
      if (s == convexSubgroupName(d)) return d;
    }
  }
  schema(where, "expected \"Trivial\", \"SecondFactor\" or \"Full\"");
}

}  // namespace adic::json
