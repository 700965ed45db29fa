#include <gtest/gtest.h>

#include "serrewt/io.hpp"

using namespace serrewt;
using io::json;

namespace {

std::string pointer_of(const json& j) {
  try {
    io::parse_scenario(j);
  } catch (const io::ConfigError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

}  // namespace

TEST(Scenario, ParsesFullScenario) {
  const json j = json::parse(R"({
    "params": {"p": 5, "f": 2, "eprime": 1, "kE_extra_degree": 2},
    "chi1": {"digits": [1, 0], "unramified_dlog": 3},
    "chi2": {"scalar": 14},
    "a": [0, 1], "J": [1], "d": [1, 0],
    "tau": {"lambda": {"scalar": 3}, "lambda_prime": {"digits": [4, 4]}},
    "M": {"r": [0, 0], "c": [0, 0]},
    "tres_ramifiee": true
  })");
  const io::Scenario sc = io::parse_scenario(j);
  EXPECT_EQ(sc.params.p, 5);
  EXPECT_EQ(sc.params.s, 2);
  EXPECT_EQ(sc.chi1->inertial.scalar(), 1);
  EXPECT_EQ(sc.chi1->unramified_dlog, 3);
  EXPECT_EQ(sc.chi2->inertial.scalar(), 14);
  EXPECT_EQ(*sc.a, (Tuple{0, 1}));
  EXPECT_EQ(*sc.J, (std::vector<int>{1}));
  EXPECT_TRUE(sc.tau->lambda_prime.is_trivial());
  EXPECT_TRUE(sc.tres_ramifiee);
  EXPECT_FALSE(sc.N.has_value());
}

TEST(Scenario, ErrorPointers) {
  EXPECT_EQ(pointer_of(json::parse(R"({})")), "/params");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 4, "f": 1, "eprime": 1}})")), "/params/p");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": "x", "eprime": 1}})")), "/params/f");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": 1}})")), "/params/eprime");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": 2, "eprime": 1}, "a": [0]})")), "/a");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": 2, "eprime": 1}, "a": [0, 2]})")), "/a/1");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": 1, "eprime": 1}, "J": [1]})")), "/J/0");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": 1, "eprime": 1}, "chi1": {"scalar": 1, "digits": [1]}})")),
            "/chi1");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": 1, "eprime": 1}, "M": {"r": [9], "c": [0]}})")),
            "/M/r/0");
  EXPECT_EQ(pointer_of(json::parse(R"({"params": {"p": 5, "f": 1, "eprime": 1}, "tau": {"lambda": {"scalar": 0}}})")),
            "/tau/lambda_prime");
}

TEST(Scenario, BuildModuleNamesField) {
  const Params P = make_params(3, 2, 1);
  try {
    io::build_module(P, io::ModuleSpec{{8, 0}, 0, {1, 0}}, "/M");
    FAIL();
  } catch (const io::ConfigError& e) {
    EXPECT_EQ(e.pointer(), "/M/c");
  }
}

TEST(Json, Encodings) {
  const Params P = make_params(3, 1, 1);
  const auto M = RankOneBreuil::make_dlog(P, {2}, 0, {0});
  EXPECT_EQ(io::to_json(M).dump(), R"({"r":[2],"a_norm_dlog":0,"c":[0],"alpha":[3]})");
  EXPECT_EQ(io::to_json(make_weight(5, 2, {4, 4}, {2, 1})).dump(), R"({"m":[0,0],"n":[2,1]})");
  EXPECT_EQ(io::to_json(InertialChar(5, 2, 7)).dump(), R"({"scalar":7,"digits":[2,1]})");
  const ExtBasis B = ext_basis(M, M);
  EXPECT_EQ(io::to_json(B)["dim"], B.dim());
}
