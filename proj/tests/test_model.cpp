#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "wefhouse/error.hpp"
#include "wefhouse/oracle.hpp"
#include "wefhouse/serialize.hpp"

using namespace wefhouse;
using namespace wefhouse::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(q("0.5") == Rational(1, 2));
  CHECK(q(".25") == Rational(1, 4));
  CHECK(q("-1.75") == Rational(-7, 4));
  CHECK(q("6/8") == Rational(3, 4));
  CHECK(q(" 3 ") == Rational(3));
  CHECK(q("6/8").to_string() == "3/4");
  CHECK(q("4/2").to_string() == "2");
  CHECK(q("-0/5").is_zero());
  CHECK(q("1/10") + q("2/10") == q("0.3"));
  for (const char* bad : {"", "abc", "1/0", "1.", "1/2/3", "--1", "1e3", "0x10"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { (void)q(bad); }) == ErrorCode::MalformedNumber);
  }
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational ordering and arithmetic") {
  CHECK(q("1/3") < q("1/2"));
  CHECK(q("-1/3") > q("-1/2"));
  CHECK(q("1/3") * 3 == Rational(1));
  CHECK(q("1/3") - q("1/3") == Rational(0));
  CHECK(-q("2/5") == q("-2/5"));
  CHECK(q("7/3") / q("7/6") == Rational(2));
  CHECK(q("-2/4").sign() == -1);
}

TEST_CASE("instance validation") {
  CHECK_NOTHROW(fix1());
  CHECK_NOTHROW(make({"1"}, {{"0"}}));
  CHECK(code_of([] { make({"1", "1"}, {{"1"}, {"1"}}); }) == ErrorCode::TooFewHouses);
  CHECK(code_of([] { make({"0"}, {{"1"}}); }) == ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { make({"-1"}, {{"1"}}); }) == ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { make({"1"}, {{"-1/2"}}); }) == ErrorCode::NegativeUtility);
  CHECK(code_of([] { make({"1", "1"}, {{"1", "2"}}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { make({"1", "1"}, {{"1", "2"}, {"1"}}); }) == ErrorCode::DimensionMismatch);

  const Instance inst = fix1();
  CHECK(inst.agent_count() == 2);
  CHECK(inst.house_count() == 2);
  CHECK(inst.utility(0, 1) == q("1/2"));
  CHECK(inst.agent_labels() == std::vector<std::string>{"a1", "a2"});
  CHECK(inst.house_labels() == std::vector<std::string>{"h1", "h2"});
}

TEST_CASE("allocation and subsidy validation") {
  const Instance inst = fix1();
  CHECK(code_of([&] { validate_allocation(inst, alloc({0, 0})); }) == ErrorCode::InvalidAllocation);
  CHECK(code_of([&] { validate_allocation(inst, alloc({0, 2})); }) == ErrorCode::InvalidAllocation);
  CHECK(code_of([&] { validate_allocation(inst, alloc({0})); }) == ErrorCode::InvalidAllocation);
  CHECK(code_of([] { SubsidyVector({q("-1")}); }) == ErrorCode::NegativeSubsidy);
  CHECK(SubsidyVector({q("1/2"), q("3/2")}).total() == Rational(2));
}

TEST_CASE("weighted envy-freeness of allocations") {
  CHECK_FALSE(is_wef_allocation(fix1(), alloc({0, 1})));
  CHECK_FALSE(is_wef_allocation(fix1(), alloc({1, 0})));
  CHECK(is_wef_allocation(fix5(), alloc({0, 1})));
  CHECK(is_wef_allocation(make({"5"}, {{"0", "3"}}), alloc({0})));
  CHECK_THROWS_AS((void)is_wef_allocation(fix1(), alloc({1, 1})), Error);
}

TEST_CASE("weighted envy-freeness of outcomes") {
  const Instance inst = fix3();
  CHECK(is_wef_outcome(inst, {alloc({0, 1}), SubsidyVector({q("0"), q("15")})}));
  CHECK(weighted_view(inst, {alloc({0, 1}), SubsidyVector({q("0"), q("15")})}, 0, 1) == Rational(6));
  CHECK_FALSE(is_wef_outcome(inst, {alloc({0, 1}), SubsidyVector({q("0"), q("14")})}));
  CHECK_FALSE(is_wef_outcome(fix1(), {alloc({0, 1}), SubsidyVector::zeros(2)}));
  CHECK_THROWS_AS((void)is_wef_outcome(inst, {alloc({0, 1}), SubsidyVector::zeros(3)}), Error);

  // Zero subsidy reduces to the allocation predicate.
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Instance s = sweep_instance(k);
    for (const auto& a : oracle::all_allocations(s)) {
      CHECK(is_wef_outcome(s, {a, SubsidyVector::zeros(s.agent_count())}) == is_wef_allocation(s, a));
    }
  }
}

TEST_CASE("scaling utilities") {
  // A common positive factor never changes the predicate.
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Instance s = sweep_instance(k);
    const Instance scaled = scale_utilities(s, q("7/3"));
    for (const auto& a : oracle::all_allocations(s)) {
      CHECK(is_wef_allocation(s, a) == is_wef_allocation(scaled, a));
    }
  }
  // Scaling only the low-valued agent of the hard instance by 1/eps removes
  // every positive cycle.
  const Instance fixed = scale_agent_utilities(fix1(), 0, Rational(2));
  CHECK(oracle::oracle_wefable_exists(fix1()) == std::nullopt);
  CHECK(oracle::oracle_wefable_exists(fixed).has_value());
}

TEST_CASE("pareto dominance") {
  const Instance inst = fix5();
  CHECK(pareto_dominates(inst, alloc({0, 1}), alloc({1, 0})));
  CHECK_FALSE(pareto_dominates(inst, alloc({1, 0}), alloc({0, 1})));
  CHECK_FALSE(pareto_dominates(inst, alloc({0, 1}), alloc({0, 1})));
}

TEST_CASE("instance JSON format") {
  const auto j = instance_to_json(fix1());
  CHECK(j["weights"] == nlohmann::json({"1", "2"}));
  CHECK(j["utilities"] == nlohmann::json::parse(R"([["1/2", "1/2"], ["1", "1"]])"));

  const Instance parsed = parse_instance(R"({"weights": [1, "2"], "utilities": [["0.5", "1/2"], [1, "1.0"]]})");
  CHECK(parsed == fix1());

  CHECK(code_of([] { parse_instance("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_instance(R"({"weights": [1]})"); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_instance(R"({"weights": [0.5], "utilities": [[1]]})"); }) == ErrorCode::MalformedNumber);
  CHECK(code_of([] { parse_instance(R"({"weights": ["x"], "utilities": [[1]]})"); }) == ErrorCode::MalformedNumber);
  CHECK(code_of([] { parse_instance(R"({"weights": [1, 1], "utilities": [[1], [1]]})"); }) ==
        ErrorCode::TooFewHouses);
}

TEST_CASE("instance JSON round trip") {
  CHECK(parse_instance(serialize_instance(fix2())) == fix2());
  const Instance labelled =
      Instance::create({q("1"), q("2")}, {{q("1"), q("2")}, {q("3"), q("4")}}, {"ann", "bo"}, {"flat", "loft"});
  CHECK(parse_instance(serialize_instance(labelled)) == labelled);
  for (const Structure s : {Structure::General, Structure::Identical, Structure::TwoType, Structure::Normalized}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      GeneratorConfig config;
      config.n = 2 + seed % 4;
      config.m = config.n + seed % 3;
      config.seed = seed;
      config.structure = s;
      const Instance inst = generate_instance(config);
      CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
  }
}

TEST_CASE("allocation and outcome JSON") {
  CHECK(allocation_to_json(alloc({0, 1})) == nlohmann::json::parse(R"({"assignment": [0, 1]})"));
  CHECK(allocation_from_json(nlohmann::json::parse(R"({"assignment": [1, 0]})")) == alloc({1, 0}));
  CHECK(code_of([] { allocation_from_json(nlohmann::json::parse(R"({"assignment": [-1]})")); }) ==
        ErrorCode::InvalidAllocation);
  const Outcome out{alloc({0, 1}), SubsidyVector({q("0"), q("15")})};
  const auto j = outcome_to_json(out);
  CHECK(j["subsidy"] == nlohmann::json({"0", "15"}));
  CHECK(outcome_from_json(j) == out);
}
