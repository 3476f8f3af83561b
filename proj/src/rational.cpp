#include "meanforge/rational.hpp"

#include <numeric>

#include "meanforge/error.hpp"

namespace meanforge {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw DomainError("rational overflow");
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw DomainError("rational overflow");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = checked_mul(num, -1);
    den = checked_mul(den, -1);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, -1), den_); }

Rational operator+(const Rational& x, const Rational& y) {
  const std::int64_t g = std::gcd(x.den_, y.den_);
  const std::int64_t lhs = checked_mul(x.num_, y.den_ / g);
  const std::int64_t rhs = checked_mul(y.num_, x.den_ / g);
  return Rational(checked_add(lhs, rhs), checked_mul(x.den_ / g, y.den_));
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  const std::int64_t g1 = std::gcd(x.num_, y.den_);
  const std::int64_t g2 = std::gcd(y.num_, x.den_);
  const std::int64_t n1 = g1 > 1 ? x.num_ / g1 : x.num_;
  const std::int64_t d2 = g1 > 1 ? y.den_ / g1 : y.den_;
  const std::int64_t n2 = g2 > 1 ? y.num_ / g2 : y.num_;
  const std::int64_t d1 = g2 > 1 ? x.den_ / g2 : x.den_;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw DomainError("rational division by zero");
  return x * Rational(y.den_, y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
  const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
  return lhs <=> rhs;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace meanforge
