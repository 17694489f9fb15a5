#include "wefhouse/generator.hpp"

#include <charconv>
#include <limits>
#include <random>
#include <vector>

#include "wefhouse/error.hpp"

namespace wefhouse {

Structure parse_structure(std::string_view name) {
  if (name == "general") return Structure::General;
  if (name == "identical") return Structure::Identical;
  if (name == "two-type") return Structure::TwoType;
  if (name == "bivalued") return Structure::Bivalued;
  if (name == "normalized") return Structure::Normalized;
  throw Error(ErrorCode::InvalidConfig, "unknown structure '" + std::string(name) + "'");
}

std::string_view structure_name(Structure s) {
  switch (s) {
    case Structure::General: return "general";
    case Structure::Identical: return "identical";
    case Structure::TwoType: return "two-type";
    case Structure::Bivalued: return "bivalued";
    case Structure::Normalized: return "normalized";
  }
  return "general";
}

UniformInt parse_distribution(std::string_view spec) {
  auto bad = [&]() {
    return Error(ErrorCode::InvalidConfig, "distribution '" + std::string(spec) + "' is not uniform:<lo>:<hi>");
  };
  constexpr std::string_view prefix = "uniform:";
  if (spec.substr(0, prefix.size()) != prefix) throw bad();
  const std::string_view rest = spec.substr(prefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw bad();
  UniformInt out;
  const auto lo = rest.substr(0, colon);
  const auto hi = rest.substr(colon + 1);
  auto parse = [&](std::string_view text, std::int64_t& value) {
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) throw bad();
  };
  parse(lo, out.lo);
  parse(hi, out.hi);
  if (out.lo > out.hi) throw bad();
  return out;
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Unbiased draw from [lo, hi] by rejection; independent of the standard
  // library's distribution implementations so output is portable.
  std::int64_t uniform(const UniformInt& range) {
    const std::uint64_t span = static_cast<std::uint64_t>(range.hi - range.lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return range.lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> draw_row(Sampler& rng, const UniformInt& range, std::size_t length) {
  std::vector<Rational> row;
  row.reserve(length);
  for (std::size_t k = 0; k < length; ++k) row.emplace_back(rng.uniform(range));
  return row;
}

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
  const std::size_t n = config.n;
  const std::size_t m = config.m == 0 ? n : config.m;
  if (n == 0) throw Error(ErrorCode::InvalidConfig, "n must be at least 1");
  if (m < n) throw Error(ErrorCode::InvalidConfig, "m must be at least n");
  const UniformInt weight_range = parse_distribution(config.weights);
  const UniformInt utility_range = parse_distribution(config.utilities);
  if (weight_range.lo < 1) throw Error(ErrorCode::InvalidConfig, "weights must be drawn from positive integers");
  if (utility_range.lo < 0) throw Error(ErrorCode::InvalidConfig, "utilities must be drawn from non-negative integers");

  Sampler rng(config.seed);
  std::vector<Rational> weights;
  std::vector<std::vector<Rational>> rows;

  switch (config.structure) {
    case Structure::General: {
      weights = draw_row(rng, weight_range, n);
      for (std::size_t i = 0; i < n; ++i) rows.push_back(draw_row(rng, utility_range, m));
      break;
    }
    case Structure::Identical: {
      weights = draw_row(rng, weight_range, n);
      rows.assign(n, draw_row(rng, utility_range, m));
      break;
    }
    case Structure::TwoType: {
      if (n < 2) throw Error(ErrorCode::InvalidConfig, "two-type instances need n >= 2");
      if (weight_range.lo == weight_range.hi && utility_range.lo == utility_range.hi) {
        throw Error(ErrorCode::InvalidConfig, "distributions admit only one agent type");
      }
      Rational w_first(rng.uniform(weight_range));
      std::vector<Rational> row_first = draw_row(rng, utility_range, m);
      Rational w_second;
      std::vector<Rational> row_second;
      do {
        w_second = Rational(rng.uniform(weight_range));
        row_second = draw_row(rng, utility_range, m);
      } while (w_second == w_first && row_second == row_first);

      std::vector<char> second(n, 0);
      bool any_second = false;
      for (std::size_t i = 1; i < n; ++i) {
        second[i] = rng.coin() ? 1 : 0;
        any_second = any_second || second[i];
      }
      if (!any_second) second[1 + static_cast<std::size_t>(rng.uniform({0, static_cast<std::int64_t>(n) - 2}))] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        weights.push_back(second[i] ? w_second : w_first);
        rows.push_back(second[i] ? row_second : row_first);
      }
      break;
    }
    case Structure::Bivalued: {
      if (m != n) throw Error(ErrorCode::InvalidConfig, "bi-valued instances need m = n");
      if (config.epsilon.is_negative() || config.epsilon >= Rational(1)) {
        throw Error(ErrorCode::InvalidConfig, "epsilon must lie in [0, 1)");
      }
      weights = draw_row(rng, weight_range, n);
      for (std::size_t i = 0; i < n; ++i) {
        auto& row = rows.emplace_back();
        for (std::size_t h = 0; h < m; ++h) row.push_back(rng.coin() ? Rational(1) : config.epsilon);
      }
      break;
    }
    case Structure::Normalized: {
      weights = draw_row(rng, weight_range, n);
      for (std::size_t i = 0; i < n; ++i) {
        auto row = draw_row(rng, utility_range, m);
        Rational total;
        for (const auto& v : row) total += v;
        for (auto& v : row) v = total.is_zero() ? Rational(1, static_cast<std::int64_t>(m)) : v / total;
        rows.push_back(std::move(row));
      }
      break;
    }
  }
  return Instance::create(std::move(weights), std::move(rows));
}

}  // namespace wefhouse
