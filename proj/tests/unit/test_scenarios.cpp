#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cosdyn/conditions.hpp"
#include "cosdyn/errors.hpp"
#include "cosdyn/scenarios.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cosdyn;
namespace fs = std::filesystem;

namespace {

const fs::path kData = COSDYN_TEST_DATA_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("worked example system") {
  const CosineSystem sys = build_example({4, 1});
  CHECK(sys.alpha(0.5) == 1.5);
  CHECK(sys.weight(-3) == 4);
  CHECK(sys.weight(0) == 3);
  CHECK(sys.weight(3) == 2);
  CHECK(sys.weight.sup() == 4);
  CHECK(sys.weight.inf() == 2);

  const CosineSystem other = build_example({10, 2.5});
  CHECK(other.weight.sup() == 10);
  CHECK(other.weight.inf() == 3.5);

  CHECK_THROWS_AS(build_example({3, 1}), ValidationError);
  CHECK_THROWS_AS(build_example({4, 0.5}), ValidationError);
  CHECK_THROWS_AS(build_example({NAN, 1}), ValidationError);
  CHECK_NOTHROW(build_example({2 + 2 * 1.5, 1.5}));
}

TEST_CASE("property: example products eventually exceed any bound") {
  testing::Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const double delta = rng.uniform(1, 3);
    const double M = 2 + 2 * delta + rng.uniform(0, 3);
    const CosineSystem sys = build_example({M, delta});
    CHECK(sys.weight.sup() == M);
    CHECK(sys.weight.inf() == 1 + delta);
    const double t = rng.uniform(-5, 5);
    CHECK(check_forward_divergence(sys, t, 1e6, 400).has_value());
  }
}

TEST_CASE("system files round-trip byte for byte") {
  const std::string text = slurp(kData / "example_m4_d1.json");
  const CosineSystem sys = parse_system(text);
  CHECK(serialize_system(sys) == text);
  CHECK(serialize_system(build_example({4, 1})) == text);

  const CosineSystem affine{Homeomorphism::affine(-0.5, 0.25),
                            WeightFunction({{0, 1.5}, {0.1, 0.3}}, 1.5, 0.3)};
  const std::string s = serialize_system(affine);
  CHECK(serialize_system(parse_system(s)) == s);
  CHECK(parse_system(s).alpha(1.0) == affine.alpha(1.0));
}

TEST_CASE("measure files") {
  CHECK(load_measure(kData / "mu.json") == AtomicMeasure::dirac(-2));
  CHECK(load_measure(kData / "empty.json").empty());
  const std::string text = slurp(kData / "mu.json");
  CHECK(serialize_measure(parse_measure(text)) == text);

  const AtomicMeasure m = parse_measure(R"({"atoms": [[1, 2], [0, 1], [1, -2], [0.1, 0.30000000000000004]]})");
  CHECK(m == AtomicMeasure({{0, 1}, {0.1, 0.30000000000000004}}));
  CHECK(parse_measure(serialize_measure(m)) == m);

  const fs::path tmp = fs::temp_directory_path() / "cosdyn_measure_roundtrip.json";
  save_measure(tmp, m);
  CHECK(load_measure(tmp) == m);
  fs::remove(tmp);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(load_measure(kData / "bad_nan.json"), ParseError);
  CHECK_THROWS_AS(parse_measure("{"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"atoms": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"atoms": [[0, "x"]]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"atom": []})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"atoms": [[1e400, 1]]})"), ParseError);
  CHECK_THROWS_AS(load_measure(kData / "missing.json"), ParseError);

  CHECK_THROWS_AS(load_system(kData / "bad_weight.json"), ValidationError);
  try {
    load_system(kData / "bad_weight.json");
  } catch (const ValidationError& e) {
    CHECK(e.field().rfind("weight.", 0) == 0);
  }
  CHECK_THROWS_AS(parse_system(R"({"alpha": {"kind": "rotation", "b": 1},
                                   "weight": {"breakpoints": [], "left_tail": 1, "right_tail": 1}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_system(R"({"alpha": {"kind": "affine", "a": 0, "b": 1},
                                   "weight": {"breakpoints": [], "left_tail": 1, "right_tail": 1}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_system(R"({"alpha": {"kind": "translation", "b": 1}})"), ParseError);
}

TEST_CASE("run configuration") {
  const RunConfig c = load_run_config(kData / "example_witness.json");
  REQUIRE(c.system.has_value());
  CHECK(*c.system == kData / "example_m4_d1.json");
  REQUIRE(c.measures.size() == 2);
  CHECK(c.measures[1] == kData / "nu.json");
  REQUIRE(c.window.has_value());
  CHECK(*c.window == CompactWindow(-5, 5));
  CHECK(c.horizon == 200);
  CHECK(c.radius == 0.25);
  CHECK(c.witness_case == WitnessCase::e_equals_k);
  CHECK_FALSE(c.tol.has_value());

  const RunConfig check = load_run_config(kData / "example_check.json");
  CHECK(check.tol == 1e-6);
  CHECK(check.grid_step == 0.001);

  CHECK_THROWS_AS(parse_run_config(R"({"horizon": 0})"), ValidationError);
  CHECK_THROWS_AS(parse_run_config(R"({"horizon": 2.5})"), ParseError);
  CHECK_THROWS_AS(parse_run_config(R"({"tol": -1})"), ValidationError);
  CHECK_THROWS_AS(parse_run_config(R"({"window": [3, 1]})"), ValidationError);
  CHECK_THROWS_AS(parse_run_config(R"({"case": "both"})"), ValidationError);
  CHECK(parse_run_config("{}").measures.empty());
}

TEST_CASE("witness case names") {
  CHECK(parse_witness_case("d-equals-k") == WitnessCase::d_equals_k);
  CHECK(parse_witness_case("e-equals-k") == WitnessCase::e_equals_k);
  CHECK(to_string(WitnessCase::d_equals_k) == "d-equals-k");
  CHECK(to_string(WitnessCase::e_equals_k) == "e-equals-k");
  CHECK_THROWS_AS(parse_witness_case("E=K"), ValidationError);
}
