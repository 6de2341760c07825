#include "latk/integer.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "latk/error.hpp"

namespace latk {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::EmptyLattice: return "EmptyLattice";
    case ErrorCode::EmptyModule: return "EmptyModule";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::AlreadyPointed: return "AlreadyPointed";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::SingularSimplex: return "SingularSimplex";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

mpz_class to_mpz_small(std::int64_t v) {
  mpz_class z;
  // long is 64 bit on every platform we build for; fall back to two halves otherwise.
  if constexpr (sizeof(long) == 8) {
    z = static_cast<long>(v);
  } else {
    z = static_cast<long>(v >> 32);
    z <<= 32;
    z += static_cast<unsigned long>(v & 0xffffffff);
  }
  return z;
}

}  // namespace

Integer::Integer(const mpz_class& z) { assign(z); }

void Integer::assign(mpz_class z) {
  if (sizeof(long) == 8 && z.fits_slong_p()) {
    value_ = static_cast<std::int64_t>(z.get_si());
  } else {
    value_ = std::move(z);
  }
}

Integer Integer::parse(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(ErrorCode::Parse, "expected an integer");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Integer(mpz_class(s, 10));
}

int Integer::sign() const {
  if (is_small()) return (small() > 0) - (small() < 0);
  return sgn(big());
}

std::int64_t Integer::to_int64() const {
  if (!is_small()) throw Error(ErrorCode::ArithmeticOverflow, "integer does not fit in 64 bits: " + str());
  return small();
}

mpz_class Integer::to_mpz() const { return is_small() ? to_mpz_small(small()) : big(); }

double Integer::to_double() const {
  return is_small() ? static_cast<double>(small()) : big().get_d();
}

std::string Integer::str() const { return is_small() ? std::to_string(small()) : big().get_str(); }

Integer Integer::operator-() const {
  if (is_small() && small() != std::numeric_limits<std::int64_t>::min()) return Integer(-small());
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_add_overflow(small(), o.small(), &r)) {
      value_ = r;
      return *this;
    }
  }
  assign(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small(), o.small(), &r)) {
      value_ = r;
      return *this;
    }
  }
  assign(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small(), o.small(), &r)) {
      value_ = r;
      return *this;
    }
  }
  assign(to_mpz() * o.to_mpz());
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw Error(ErrorCode::Internal, "division by zero");
  if (is_small() && o.is_small() &&
      !(small() == std::numeric_limits<std::int64_t>::min() && o.small() == -1)) {
    value_ = small() / o.small();
    return *this;
  }
  mpz_class q;
  mpz_class a = to_mpz();
  mpz_class b = o.to_mpz();
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  assign(std::move(q));
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw Error(ErrorCode::Internal, "division by zero");
  if (is_small() && o.is_small()) {
    value_ = o.small() == -1 ? 0 : small() % o.small();
    return *this;
  }
  mpz_class r;
  mpz_class a = to_mpz();
  mpz_class b = o.to_mpz();
  mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  assign(std::move(r));
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() == b.small();
  if (a.is_small() != b.is_small()) return false;  // canonical representation
  return a.big() == b.big();
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() <=> b.small();
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (a.is_small() && b.is_small() && a.to_int64() != kMin && b.to_int64() != kMin) {
    std::int64_t x = a.to_int64() < 0 ? -a.to_int64() : a.to_int64();
    std::int64_t y = b.to_int64() < 0 ? -b.to_int64() : b.to_int64();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_class x = a.to_mpz();
  mpz_class y = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::Internal, "rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (!(g == Integer(1)) && !g.is_zero()) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  return is_integer() ? num_.str() : num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_.is_zero()) throw Error(ErrorCode::Internal, "division by zero");
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace latk
