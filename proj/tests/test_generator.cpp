#include <doctest.h>

#include "fixtures.hpp"
#include "wefhouse/error.hpp"
#include "wefhouse/serialize.hpp"
#include "wefhouse/special_cases.hpp"

using namespace wefhouse;
using namespace wefhouse::testing;

TEST_CASE("distribution specs") {
  const UniformInt d = parse_distribution("uniform:1:3");
  CHECK(d.lo == 1);
  CHECK(d.hi == 3);
  CHECK(parse_distribution("uniform:-2:-2").lo == -2);
  for (const char* bad : {"uniform:3:1", "uniform:1", "normal:0:1", "uniform:a:2", "uniform:1:2:3", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_distribution(bad), Error);
  }
}

TEST_CASE("structure names round trip") {
  for (const Structure s :
       {Structure::General, Structure::Identical, Structure::TwoType, Structure::Bivalued, Structure::Normalized}) {
    CHECK(parse_structure(structure_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_structure("three-type"), Error);
}

TEST_CASE("generation is deterministic and respects ranges") {
  GeneratorConfig config;
  config.n = 4;
  config.m = 6;
  config.seed = 99;
  const Instance a = generate_instance(config);
  CHECK(serialize_instance(a) == serialize_instance(generate_instance(config)));
  config.seed = 100;
  CHECK_FALSE(generate_instance(config) == a);
  CHECK(a.agent_count() == 4);
  CHECK(a.house_count() == 6);
  for (AgentIndex i = 0; i < 4; ++i) {
    CHECK(a.weight(i) >= Rational(1));
    CHECK(a.weight(i) <= Rational(3));
    for (HouseIndex h = 0; h < 6; ++h) {
      CHECK(a.utility(i, h) >= Rational(0));
      CHECK(a.utility(i, h) <= Rational(3));
    }
  }
}

TEST_CASE("structures produce their declared form") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig config;
    config.n = 2 + seed % 4;
    config.m = config.n + 1;
    config.seed = seed;

    config.structure = Structure::Identical;
    CHECK(has_identical_utilities(generate_instance(config)));

    config.structure = Structure::TwoType;
    CHECK(detect_two_types(generate_instance(config)).has_value());

    config.structure = Structure::Normalized;
    const Instance norm = generate_instance(config);
    for (AgentIndex i = 0; i < norm.agent_count(); ++i) {
      Rational total;
      for (const auto& v : norm.utility_row(i)) total += v;
      CHECK(total == Rational(1));
    }

    config.structure = Structure::Bivalued;
    config.m = config.n;
    config.epsilon = q("1/2");
    const Instance bi = generate_instance(config);
    const auto eps = bivalued_epsilon(bi);
    REQUIRE(eps);
    CHECK((*eps == q("1/2") || *eps == Rational(0)));
  }
}

TEST_CASE("invalid configs") {
  GeneratorConfig config;
  config.n = 3;
  config.m = 2;
  CHECK_THROWS_AS(generate_instance(config), Error);
  config.m = 3;
  config.weights = "uniform:0:2";
  CHECK_THROWS_AS(generate_instance(config), Error);
  config.weights = "uniform:1:3";
  config.structure = Structure::Bivalued;
  config.m = 4;
  CHECK_THROWS_AS(generate_instance(config), Error);
  config.m = 3;
  config.epsilon = Rational(1);
  CHECK_THROWS_AS(generate_instance(config), Error);
}
