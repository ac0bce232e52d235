#include "harmonic/sylvester.hpp"

#include <stdexcept>
#include <string>

namespace harmonic {

SylvesterTable::SylvesterTable(std::size_t t_max) {
  if (t_max < 1 || t_max > kMaxTerms) {
    throw std::invalid_argument("sylvester table length must be in [1, " +
                                std::to_string(kMaxTerms) + "], got " + std::to_string(t_max));
  }
  r_.reserve(t_max);
  s_.reserve(t_max + 1);
  s_.emplace_back(0);
  BigInt term = 1;
  for (std::size_t j = 1; j <= t_max; ++j) {
    if (j > 1) term = term * (term + BigInt(1));
    r_.push_back(term);
    s_.push_back(s_.back() + Rational(BigInt(1), term));
  }
}

SylvesterTable SylvesterTable::covering(const BigInt& bound) {
  // r_{j+1} >= r_j^2, so the digit count doubles per term; probe without
  // building big tables.
  std::size_t terms = 1;
  BigInt term = 1;
  while (term <= bound) {
    ++terms;
    if (terms > kMaxTerms) {
      throw std::out_of_range("bound " + bound.to_string().substr(0, 20) +
                              "... needs more than " + std::to_string(kMaxTerms) +
                              " harmonic numbers");
    }
    term = term * (term + BigInt(1));
  }
  return SylvesterTable(terms);
}

const BigInt& SylvesterTable::r(std::size_t j) const {
  if (j < 1 || j > r_.size()) {
    throw std::out_of_range("harmonic number index " + std::to_string(j) + " outside [1, " +
                            std::to_string(r_.size()) + "]");
  }
  return r_[j - 1];
}

const Rational& SylvesterTable::prefix_sum(std::size_t t) const {
  if (t >= s_.size()) {
    throw std::out_of_range("prefix sum index " + std::to_string(t) + " outside [0, " +
                            std::to_string(r_.size()) + "]");
  }
  return s_[t];
}

Rational SylvesterTable::telescope_sum(std::size_t t) const {
  if (t + 1 > r_.size()) {
    throw std::out_of_range("telescope_sum needs t + 1 <= " + std::to_string(r_.size()) +
                            ", got t=" + std::to_string(t));
  }
  Rational sum;
  for (std::size_t j = 1; j <= t; ++j) sum += Rational(BigInt(1), r(j) + BigInt(1));
  return sum;
}

std::size_t SylvesterTable::largest_index_below(const BigInt& bound) const {
  if (bound < BigInt(1)) {
    throw std::invalid_argument("largest_index_below needs bound >= 1, got " + bound.to_string());
  }
  if (r_.back() <= bound) {
    throw std::out_of_range("sylvester table of length " + std::to_string(r_.size()) +
                            " cannot bracket bound " + bound.to_string());
  }
  std::size_t q = 0;
  while (r_[q] <= bound) ++q;
  return q;
}

}  // namespace harmonic
