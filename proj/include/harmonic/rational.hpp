#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "harmonic/bigint.hpp"

namespace harmonic {

/// Exact fraction num/den over BigInt.
///
/// Always canonical: den >= 1, gcd(|num|, den) == 1, sign on the numerator.
/// Every arithmetic result is reduced before it is returned, so structural
/// equality of (num, den) is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(const BigInt& integer) : num_(integer) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t integer) : num_(integer) {}   // NOLINT(google-explicit-constructor)
  Rational(int integer) : num_(integer) {}            // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error("division by zero") when den == 0.
  Rational(BigInt num, BigInt den);

  /// Accepts "p/q", an integer, or a finite decimal such as "-1.75".
  /// Throws std::invalid_argument on malformed text, std::domain_error on q == 0.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }

  Rational abs() const;
  Rational reciprocal() const;
  BigInt floor() const;
  BigInt ceil() const;

  /// "p/q", or just "p" when the value is an integer.
  std::string to_string() const;
  /// Fixed point with exactly `digits` fractional digits, half away from zero.
  std::string to_decimal(int digits) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void canonicalize();

  BigInt num_{0};
  BigInt den_{1};
};

/// Canonical num/den. Throws std::domain_error("division by zero") on den == 0.
inline Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace harmonic
