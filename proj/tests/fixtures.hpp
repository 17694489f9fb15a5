#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wefhouse/generator.hpp"
#include "wefhouse/model.hpp"
#include "wefhouse/rational.hpp"

namespace wefhouse::testing {

inline Rational q(const std::string& text) { return Rational::parse(text); }

inline Instance make(std::initializer_list<const char*> weights,
                     std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Rational> w;
  for (const char* x : weights) w.push_back(q(x));
  std::vector<std::vector<Rational>> v;
  for (const auto& row : rows) {
    auto& out = v.emplace_back();
    for (const char* x : row) out.push_back(q(x));
  }
  return Instance::create(std::move(w), std::move(v));
}

inline Allocation alloc(std::initializer_list<HouseIndex> houses) { return Allocation(std::vector<HouseIndex>(houses)); }

// Hard instance with two agents and eps = 1/2.
inline Instance fix1() { return make({"1", "2"}, {{"1/2", "1/2"}, {"1", "1"}}); }

// Hard instance with three agents and eps = 1/100.
inline Instance fix2() {
  return make({"1", "2", "3"}, {{"49/100", "49/100", "1/50"}, {"1/2", "1/2", "0"}, {"0", "0", "1"}});
}

inline Instance fix3() { return make({"1", "3"}, {{"6", "3"}, {"6", "3"}}); }
inline Instance fix4() { return make({"2", "1"}, {{"4", "2"}, {"1", "2"}}); }
inline Instance fix5() { return make({"1", "1"}, {{"2", "1"}, {"1", "2"}}); }
inline Instance fix6() { return make({"1", "1"}, {{"1", "0"}, {"1", "0"}}); }
inline Instance fix7() { return make({"1", "2"}, {{"1", "1"}, {"1", "1"}}); }

// Small general instance drawn for sweep index k: n in 1..4, m in n..5,
// utilities 0..3, weights 1..3.
inline Instance sweep_instance(std::uint64_t k) {
  GeneratorConfig config;
  config.n = 1 + k % 4;
  config.m = config.n + (k / 4) % (6 - config.n);
  config.seed = 0x5eed0000ULL + k;
  config.weights = "uniform:1:3";
  config.utilities = "uniform:0:3";
  return generate_instance(config);
}

}  // namespace wefhouse::testing
