#include "harmonic/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace harmonic {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto malformed = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  if (text.empty()) throw malformed();

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    if (slash == 0 || slash + 1 == text.size()) throw malformed();
    try {
      return Rational(BigInt::parse(text.substr(0, slash)), BigInt::parse(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw malformed();
    }
  }

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    try {
      return Rational(BigInt::parse(text));
    } catch (const std::invalid_argument&) {
      throw malformed();
    }
  }

  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
    negative = whole.front() == '-';
    whole.remove_prefix(1);
  }
  if ((whole.empty() && frac.empty()) || frac.empty()) throw malformed();
  for (char c : frac) {
    if (c < '0' || c > '9') throw malformed();
  }
  for (char c : whole) {
    if (c < '0' || c > '9') throw malformed();
  }
  const BigInt scale = BigInt::pow(10, frac.size());
  BigInt magnitude = (whole.empty() ? BigInt(0) : BigInt::parse(whole)) * scale + BigInt::parse(frac);
  return Rational(negative ? -magnitude : magnitude, scale);
}

Rational Rational::abs() const {
  Rational out = *this;
  out.num_ = num_.abs();
  return out;
}

Rational Rational::reciprocal() const { return Rational(den_, num_); }

BigInt Rational::floor() const { return BigInt::floor_div(num_, den_); }

BigInt Rational::ceil() const { return BigInt::ceil_div(num_, den_); }

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  const BigInt scale = BigInt::pow(10, static_cast<unsigned long>(digits));
  const BigInt scaled = num_.abs() * scale;
  BigInt units = scaled / den_;
  const BigInt remainder = scaled % den_;
  if (remainder * BigInt(2) >= den_) units += 1;

  std::string body = units.to_string();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  if (num_.sign() < 0 && !units.is_zero()) body.insert(0, "-");
  return body;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  // Copy first: rhs may alias *this.
  const BigInt rn = rhs.num_;
  const BigInt rd = rhs.den_;
  num_ *= rd;
  den_ *= rn;
  canonicalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace harmonic
