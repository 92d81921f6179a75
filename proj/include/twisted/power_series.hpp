#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twisted {

/// Truncated power series c_0 + c_1 z + ... + c_N z^N with exact rational
/// coefficients. Every operation keeps the truncation order of its inputs
/// (the smaller one for binary operations).
class PowerSeries {
public:
  PowerSeries() : coeffs_(1) {}
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  PowerSeries(std::vector<mpq_class> coeffs, std::size_t order);

  static PowerSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  mpq_class& operator[](std::size_t i) { return coeffs_[i]; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  /// Requires c_0 = 0.
  PowerSeries exp() const;
  /// Requires c_0 = 1.
  PowerSeries log() const;
  /// Requires c_0 ≠ 0.
  PowerSeries reciprocal() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const mpq_class& s, const PowerSeries& a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::vector<mpq_class> coeffs_;
};

/// exp(Σ_{n≥1} a_n z^n / n) to the given order, with a_1 = terms[0].
/// `terms` must hold at least `order` values.
PowerSeries exp_of_weighted_sum(const std::vector<mpz_class>& terms, std::size_t order);

/// (1 − z^d)^e expanded by the binomial series.
PowerSeries binomial_factor(std::size_t d, const mpq_class& e, std::size_t order);

/// Coefficients as fraction strings, e.g. {"1", "-5/2"}.
std::vector<std::string> coefficient_strings(const PowerSeries& s);

/// "1+z+3z^2+O(z^4)" style rendering.
std::string to_string(const PowerSeries& s);

} // namespace twisted
