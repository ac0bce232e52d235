#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace harmonic {

/// Arbitrary-precision signed integer.
///
/// Thin value type over GMP's mpz. Division and remainder truncate toward
/// zero like the built-in integer types; use floor_div / ceil_div when the
/// rounding direction matters.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigInt(int value) : BigInt(static_cast<std::int64_t>(value)) {}  // NOLINT
  BigInt(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses an optionally signed base-10 integer. Throws std::invalid_argument.
  static BigInt parse(std::string_view text);

  static BigInt pow(const BigInt& base, unsigned long exponent);
  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt lcm(const BigInt& a, const BigInt& b);
  static BigInt factorial(unsigned long n);

  /// Quotient rounded toward negative / positive infinity. Divisor must be
  /// non-zero.
  static BigInt floor_div(const BigInt& a, const BigInt& b);
  static BigInt ceil_div(const BigInt& a, const BigInt& b);

  int sign() const { return mpz_sgn(value_.get_mpz_t()); }
  bool is_zero() const { return sign() == 0; }
  BigInt abs() const;

  bool fits_int64() const;
  /// Throws std::out_of_range when the value does not fit.
  std::int64_t to_int64() const;
  /// Number of base-10 digits of |value| (1 for zero).
  std::size_t digit_count() const;

  std::string to_string() const { return value_.get_str(10); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);
  BigInt& operator%=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
  friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  const mpz_class& raw() const { return value_; }

 private:
  explicit BigInt(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

}  // namespace harmonic
