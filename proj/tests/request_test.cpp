#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "adic/error.hpp"
#include "adic/request.hpp"
#include "adic/topology.hpp"
#include "support.hpp"

using namespace adic;
using adic::testing::codeOf;
using adic::testing::Q;

namespace {

const char* kCanonical[] = {
    R"({"command":"eval","prime":3,"params":{"f":{"coeffs":["0","1"],"tail_vp":"inf"},"x":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":"0"}}}})",
    R"({"schema_version":1,"command":"eval","prime":5,"params":{"f":{"coeffs":["1/5","-2"],"tail_vp":3},"x":{"kind":"disc","alpha":"1","r":"1/2"},"truncation":"Full"}})",
    R"({"command":"classify","prime":3,"params":{"x":{"kind":"type5","alpha":"0","q":"0","lambda":"inf"}}})",
    R"({"command":"classify","prime":2,"params":{"x":{"kind":"type5","alpha":"1/3","q":"1/2","lambda":{"k":3,"value":["1","0","1"]}}}})",
    R"({"command":"classify","prime":3,"params":{"x":{"kind":"type5","alpha":"0","q":"1","lambda":{"k":2,"value":["2","1"],"modulus":["2","2","1"]}}}})",
    R"({"command":"member","prime":3,"params":{"x":{"kind":"classical","alpha":"3"},"subset":{"numerators":[{"coeffs":["0","1"],"tail_vp":"inf"}],"denominator":{"coeffs":["3"],"tail_vp":"inf"}}}})",
    R"({"command":"closure","prime":3,"params":{"x":{"kind":"disc","alpha":"0","q":"1"},"k":1}})",
    R"({"command":"specializes","prime":3,"seed":42,"params":{"x":{"kind":"disc","alpha":"0","q":"0"},"y":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":"0"}},"trials":500}})",
    R"({"command":"vertical","prime":3,"params":{"y":{"kind":"type5","alpha":"0","q":"1","lambda":{"k":1,"value":"2"}}}})",
    R"({"command":"horizontal","prime":3,"params":{"x":{"kind":"classical","alpha":"1"},"delta":"Full"}})",
    R"({"command":"localize","prime":3,"params":{"ring":"poly_ring","numerators":[{"coeffs":["0","1"],"tail_vp":"inf"}],"denominator":{"coeffs":["3"],"tail_vp":"inf"}}})",
    R"({"command":"power-bounded","prime":3,"params":{"f":{"coeffs":["0","1"],"tail_vp":"inf"},"ring":{"kind":"localized","base":"poly_ring","numerators":[{"coeffs":["0","1"],"tail_vp":"inf"}],"denominator":{"coeffs":["3"],"tail_vp":"inf"}}}})",
    R"({"command":"top-nilpotent","prime":7,"params":{"f":{"coeffs":["7"],"tail_vp":"inf"},"ring":"tate_algebra"}})",
    R"({"command":"continuity","prime":3,"params":{"x":{"kind":"disc","alpha":"0","q":"1/2"},"truncation":"Full","samples":[{"coeffs":["1","3"],"tail_vp":"inf"}]}})",
    R"({"command":"nullstellensatz","prime":3,"params":{"f":{"coeffs":["0","1/3"],"tail_vp":"inf"}}})",
    R"({"command":"newton","prime":3,"params":{"f":{"coeffs":["0","9","3","1"],"tail_vp":"inf"}}})",
};

std::string roundTrip(const std::string& text, const RequestDefaults& d = {}) {
  return serializeRequest(parseRequest(text, d));
}

std::string run(const std::string& text, const RequestDefaults& d = {}) {
  return renderResponse(runRequest(text, d), false);
}

std::string errorCode(const Response& r) { return r.body.at("error").at("code").get<std::string>(); }

}  // namespace

TEST(Request, CanonicalRoundTripIsByteIdentical) {
  for (const char* text : kCanonical) EXPECT_EQ(roundTrip(text), text);
}

TEST(Request, NonCanonicalInputNormalizes) {
  const std::string messy =
      R"({"params":{"x":{"alpha":"4/2","kind":"classical"},"f":{"coeffs":["-0/5","2/6"]}},"prime":3,"command":"eval"})";
  const std::string canon = roundTrip(messy);
  EXPECT_EQ(canon,
            R"({"command":"eval","prime":3,"params":{"f":{"coeffs":["0","1/3"],"tail_vp":"inf"},"x":{"kind":"classical","alpha":"2"}}})");
  EXPECT_EQ(roundTrip(canon), canon);
  // A k = 1 direction given as a one-element array is written as a residue string.
  EXPECT_EQ(roundTrip(R"({"command":"classify","prime":5,"params":{"x":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":["3"]}}}})"),
            R"({"command":"classify","prime":5,"params":{"x":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":"3"}}}})");
}

TEST(RequestProperty, RandomRequestsRoundTrip) {
  SeriesSampler s(Prime(3), 3);
  auto f9 = FqContext::create(Prime(3), 2);
  const auto dirs = enumerateP1(*f9, true);
  for (int i = 0; i < 500; ++i) {
    json::Json params;
    const TateSeries f = s.integralPolynomial(6, 6).scaled(powP(Prime(3), -static_cast<long>(s.below(3))));
    params["f"] = json::toJson(s.below(3) == 0 ? TateSeries(Prime(3), f.coeffs(), ExtInt(static_cast<long>(s.below(9)) - 2)) : f);
    const Rational alpha = Rational(static_cast<long>(s.below(200))) * s.unit();
    switch (s.below(3)) {
      case 0: params["x"] = json::toJson(PointDescriptor::classical(Prime(3), alpha)); break;
      case 1: params["x"] = json::toJson(PointDescriptor::disc(Prime(3), alpha, Radius::pPower(Rational(static_cast<long>(s.below(7))) / 2))); break;
      default:
        params["x"] = json::toJson(PointDescriptor::type5(Prime(3), alpha, Rational(static_cast<long>(s.below(5))) / 3, f9,
                                                          dirs[s.below(dirs.size())]));
    }
    json::Json req{{"command", "eval"}, {"prime", 3}, {"params", params}};
    const std::string text = req.dump();
    ASSERT_EQ(roundTrip(text), text);
    ASSERT_EQ(run(text), run(text));
  }
}

TEST(Request, SpecExamples) {
  EXPECT_EQ(run(kCanonical[0]), R"j({"ok":true,"result":"(p^{0}, (1/2)^{1})"})j");
  const auto zero =
      run(R"({"command":"eval","prime":3,"params":{"f":{"coeffs":[]},"x":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":"0"}}}})");
  EXPECT_EQ(zero, R"({"ok":true,"result":"0"})");
  const auto r = runRequest(
      R"({"command":"localize","prime":3,"params":{"ring":"formal_power_series","numerators":[{"coeffs":["3"]}],"denominator":{"coeffs":["3"]}}})");
  EXPECT_EQ(r.exitStatus, 1);
  EXPECT_FALSE(r.body.at("ok").get<bool>());
  EXPECT_EQ(errorCode(r), "NotOpenIdeal");
}

TEST(Request, ResultShapes) {
  auto body = [](const char* text) { return runRequest(text).body.at("result"); };
  const auto cls = body(kCanonical[2]);
  EXPECT_EQ(cls.at("type"), 5);
  EXPECT_EQ(cls.at("in_d"), false);
  const auto closure = body(kCanonical[6]);
  EXPECT_EQ(closure.size(), 5u);
  const auto sampled = body(kCanonical[7]);
  EXPECT_EQ(sampled.at("specializes"), true);
  EXPECT_EQ(sampled.at("sampling").at("consistent"), true);
  EXPECT_EQ(sampled.at("sampling").at("trials_run"), 500);
  const auto loc = body(kCanonical[10]);
  EXPECT_EQ(loc.at("norm_exponent"), "1");
  const auto pb = body(kCanonical[11]);
  EXPECT_EQ(pb.at("status"), "True");
  const auto ns = body(kCanonical[14]);
  EXPECT_EQ(ns.at("value"), "p^{1}");
  EXPECT_EQ(ns.at("witness").at("kind"), "disc");
  const auto newton = body(kCanonical[15]);
  // w (w^2 + 3w + 9): one root at 0, two of valuation 1
  EXPECT_EQ(newton.at("segments").dump(), R"([{"slope":"inf","multiplicity":1},{"slope":"-1","multiplicity":2}])");
}

TEST(Request, SchemaViolationsExitWithTwo) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {R"({"command":"eval","prime":3,"params":{"f":{"coeffs":["1"]},"x":{"kind":"classical","alpha":"0"},"extra":1}})", "SchemaError"},
      {R"({"command":"eval","prime":3,"bogus":true,"params":{}})", "SchemaError"},
      {R"({"command":"eval","prime":3,"params":{"f":{"coeffs":["1"],"deg":1},"x":{"kind":"classical","alpha":"0"}}})", "SchemaError"},
      {R"({"command":"teleport","prime":3,"params":{}})", "SchemaError"},
      {R"({"command":"newton","prime":4,"params":{"f":{"coeffs":["1"]}}})", "SchemaError"},
      {R"({"command":"newton","params":{"f":{"coeffs":["1"]}}})", "SchemaError"},
      {R"({"command":"newton","prime":3,"params":{"f":{"coeffs":[1]}}})", "SchemaError"},
      {R"({"command":"newton","prime":3,"params":{"f":{"coeffs":["1.5"]}}})", "SchemaError"},
      {R"({"schema_version":2,"command":"newton","prime":3,"params":{"f":{"coeffs":["1"]}}})", "SchemaError"},
      {R"({"command":"newton","prime":3,"seed":-1,"params":{"f":{"coeffs":["1"]}}})", "SchemaError"},
      {R"({"command":"classify","prime":3,"params":{"x":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":"3"}}}})", "SchemaError"},
      {R"({"command":"classify","prime":3,"params":{"x":{"kind":"disc","alpha":"0","q":"1","r":"1/2"}}})", "SchemaError"},
      {R"({"command":"newton","prime":3,"params":{"f":{"coeffs":["1"]})", "ParseError"},
      {"", "ParseError"},
  };
  for (const auto& [text, code] : cases) {
    const auto r = runRequest(text);
    EXPECT_EQ(r.exitStatus, 2) << text;
    EXPECT_EQ(errorCode(r), code) << text;
  }
}

TEST(Request, DomainErrorsExitWithOne) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {R"({"command":"classify","prime":3,"params":{"x":{"kind":"classical","alpha":"1/3"}}})", "CenterOutsideDisc"},
      {R"({"command":"closure","prime":3,"params":{"x":{"kind":"type5","alpha":"0","q":"0","lambda":"inf"},"k":1}})", "PointNotInD"},
      {R"({"command":"horizontal","prime":3,"params":{"x":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":"0"}},"delta":"SecondFactor"}})", "Gamma1NotContained"},
      {R"({"command":"eval","prime":3,"params":{"f":{"coeffs":["9"],"tail_vp":1},"x":{"kind":"disc","alpha":"0","q":"0"}}})", "UncertainTail"},
      {R"({"command":"continuity","prime":3,"params":{"x":{"kind":"disc","alpha":"0","q":"0"},"samples":[]}})", "EmptySampleSet"},
      {R"({"command":"classify","prime":3,"params":{"x":{"kind":"disc","alpha":"0","r":"1/3"}}})", "InvalidArgument"},
  };
  for (const auto& [text, code] : cases) {
    const auto r = runRequest(text);
    EXPECT_EQ(r.exitStatus, 1) << text;
    EXPECT_EQ(errorCode(r), code) << text;
  }
}

TEST(Request, DefaultsFillPrimeAndSeed) {
  const std::string text = R"({"command":"newton","params":{"f":{"coeffs":["0","1"]}}})";
  RequestDefaults d;
  d.prime = 5;
  EXPECT_EQ(roundTrip(text, d), R"({"command":"newton","prime":5,"params":{"f":{"coeffs":["0","1"],"tail_vp":"inf"}}})");
  EXPECT_EQ(codeOf([&] { parseRequest(text); }), ErrorCode::SchemaError);
  // An explicit prime wins over the default.
  EXPECT_EQ(parseRequest(R"({"command":"newton","prime":3,"params":{"f":{"coeffs":["1"]}}})", d).prime.value(), 3u);

  const std::string sampled =
      R"({"command":"specializes","prime":3,"params":{"x":{"kind":"type5","alpha":"0","q":"0","lambda":{"k":1,"value":"0"}},"y":{"kind":"disc","alpha":"0","q":"0"},"trials":500}})";
  RequestDefaults a, b;
  a.seed = 11;
  b.seed = 11;
  EXPECT_EQ(run(sampled, a), run(sampled, b));
  std::string withSeed = sampled;
  withSeed.insert(withSeed.find(R"("params")"), R"("seed":11,)");
  EXPECT_EQ(run(withSeed), run(sampled, a));
}

TEST(Request, OutputIsDeterministic) {
  for (const char* text : kCanonical) {
    const auto first = run(text);
    for (int i = 0; i < 3; ++i) ASSERT_EQ(run(text), first) << text;
    EXPECT_EQ(renderResponse(runRequest(text), true), runRequest(text).body.dump(2));
  }
}
