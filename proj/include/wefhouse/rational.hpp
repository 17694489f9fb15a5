#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace wefhouse {

/// Exact arbitrary-precision rational, always held in lowest terms with a
/// positive denominator. Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(to_mpz(value)) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error(MalformedNumber) when `den` is zero.
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts integers ("-3"), decimals ("0.25") and fractions ("6/8").
  /// Decimals are converted exactly. Throws Error(MalformedNumber).
  static Rational parse(std::string_view text);

  /// "p" when the denominator is one, otherwise "p/q".
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  template <std::integral T>
  static mpz_class to_mpz(T value) {
    if constexpr (sizeof(T) <= sizeof(long)) {
      if constexpr (std::is_signed_v<T>) {
        return mpz_class(static_cast<long>(value));
      } else {
        return mpz_class(static_cast<unsigned long>(value));
      }
    } else if constexpr (std::is_signed_v<T>) {
      return mpz_class(std::to_string(static_cast<long long>(value)));
    } else {
      return mpz_class(std::to_string(static_cast<unsigned long long>(value)));
    }
  }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wefhouse
