#pragma once

// Exact integers with a checked 64-bit fast path. Every operation that would
// overflow int64 is redone in GMP and the result is demoted again when it
// fits, so the representation of a value is canonical.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace latk {

class Integer {
 public:
  Integer() = default;

  template <std::signed_integral T>
  Integer(T v) : value_(static_cast<std::int64_t>(v)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT(implicit)
    if (v <= static_cast<std::uint64_t>(INT64_MAX)) {
      value_ = static_cast<std::int64_t>(v);
    } else {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
      value_ = std::move(z);
    }
  }

  explicit Integer(const mpz_class& z);

  /// Parses an optionally signed decimal literal; throws latk::Error on junk.
  static Integer parse(std::string_view text);

  bool is_small() const { return std::holds_alternative<std::int64_t>(value_); }
  int sign() const;
  bool is_zero() const { return is_small() && small() == 0; }
  bool fits_int64() const { return is_small(); }
  /// Throws latk::Error(ArithmeticOverflow) if the value does not fit.
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  double to_double() const;
  std::string str() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  /// Truncating division, like built-in integers.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

 private:
  std::int64_t small() const { return std::get<std::int64_t>(value_); }
  const mpz_class& big() const { return std::get<mpz_class>(value_); }
  void assign(mpz_class z);

  std::variant<std::int64_t, mpz_class> value_{std::int64_t{0}};
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Quotient rounded towards negative infinity. `b` must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder matching floor_div; has the sign of `b`.
Integer floor_mod(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer num) : num_(std::move(num)) {}  // NOLINT(implicit)
  template <std::integral T>
  Rational(T v) : num_(v) {}  // NOLINT(implicit)
  Rational(Integer num, Integer den);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_integer() const { return den_ == Integer(1); }
  int sign() const { return num_.sign(); }
  Integer floor() const { return floor_div(num_, den_); }
  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace latk
