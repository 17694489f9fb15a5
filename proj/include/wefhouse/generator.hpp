#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wefhouse/model.hpp"

namespace wefhouse {

enum class Structure { General, Identical, TwoType, Bivalued, Normalized };

Structure parse_structure(std::string_view name);
std::string_view structure_name(Structure s);

/// Integer range for the `uniform:<lo>:<hi>` distribution language.
struct UniformInt {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Throws Error(InvalidConfig) for anything but `uniform:<lo>:<hi>` with lo <= hi.
UniformInt parse_distribution(std::string_view spec);

struct GeneratorConfig {
  std::size_t n = 2;
  std::size_t m = 0;  // 0 means m = n
  std::uint64_t seed = 0;
  std::string weights = "uniform:1:3";
  std::string utilities = "uniform:0:3";
  Structure structure = Structure::General;
  Rational epsilon;  // low value for Structure::Bivalued
};

/// Identifier of the PRNG and sampling scheme, recorded in reports.
inline constexpr std::string_view kGeneratorAlgorithm = "mt19937_64+rejection-v1";

/// Deterministic: the same config always yields the same instance.
/// Throws Error(InvalidConfig) when the config cannot produce a valid instance
/// of the requested structure.
Instance generate_instance(const GeneratorConfig& config);

}  // namespace wefhouse
