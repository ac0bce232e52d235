#include "harmonic/bigint.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

static_assert(sizeof(long) == 8, "GMP si/ui conversions assume LP64");

namespace harmonic {

BigInt::BigInt(std::int64_t value) : value_(static_cast<long>(value)) {}

BigInt::BigInt(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}

BigInt BigInt::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  mpz_class value;
  if (value.set_str(normalized, 10) != 0) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  return BigInt(std::move(value));
}

BigInt BigInt::pow(const BigInt& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return BigInt(std::move(out));
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return BigInt(std::move(out));
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return BigInt(std::move(out));
}

BigInt BigInt::factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return BigInt(std::move(out));
}

BigInt BigInt::floor_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return BigInt(std::move(out));
}

BigInt BigInt::ceil_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return BigInt(std::move(out));
}

BigInt BigInt::abs() const { return BigInt(mpz_class(::abs(value_))); }

bool BigInt::fits_int64() const { return mpz_fits_slong_p(value_.get_mpz_t()) != 0; }

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) {
    throw std::out_of_range("integer " + to_string() + " does not fit in 64 bits");
  }
  return mpz_get_si(value_.get_mpz_t());
}

std::size_t BigInt::digit_count() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t n = mpz_sizeinbase(value_.get_mpz_t(), 10);
  if (n > 1 && BigInt::pow(10, n - 1) > abs()) --n;
  return n;
}

BigInt BigInt::operator-() const { return BigInt(mpz_class(-value_)); }

BigInt& BigInt::operator+=(const BigInt& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace harmonic
