#include "twisted/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "twisted/error.hpp"

namespace twisted {

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s[0] = 1;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  return PowerSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1),
                     std::min(order, this->order()));
}

PowerSeries PowerSeries::exp() const {
  if (coeffs_[0] != 0) throw InputError("exp needs a series with constant term 0");
  const std::size_t n = order();
  PowerSeries f(n);
  f[0] = 1;
  // n f_n = Σ_{k=1}^{n} k g_k f_{n−k}
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= m; ++k)
      if (coeffs_[k] != 0) acc += mpq_class(static_cast<unsigned long>(k)) * coeffs_[k] * f[m - k];
    f[m] = acc / static_cast<unsigned long>(m);
  }
  return f;
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != 1) throw InputError("log needs a series with constant term 1");
  const std::size_t n = order();
  PowerSeries g(n);
  // n g_n = n f_n − Σ_{k=1}^{n−1} k g_k f_{n−k}
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class acc = mpq_class(static_cast<unsigned long>(m)) * coeffs_[m];
    for (std::size_t k = 1; k < m; ++k)
      if (coeffs_[m - k] != 0) acc -= mpq_class(static_cast<unsigned long>(k)) * g[k] * coeffs_[m - k];
    g[m] = acc / static_cast<unsigned long>(m);
  }
  return g;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw InputError("reciprocal needs a nonzero constant term");
  const std::size_t n = order();
  PowerSeries r(n);
  const mpq_class inv0 = 1 / coeffs_[0];
  r[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= m; ++k)
      if (coeffs_[k] != 0) acc += coeffs_[k] * r[m - k];
    r[m] = -acc * inv0;
  }
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries c(n);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return c;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries c(n);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return c;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries c(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

PowerSeries operator*(const mpq_class& s, const PowerSeries& a) {
  PowerSeries c(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) c[i] = s * a[i];
  return c;
}

PowerSeries exp_of_weighted_sum(const std::vector<mpz_class>& terms, std::size_t order) {
  if (terms.size() < order) throw InputError("not enough sequence terms for the requested order");
  PowerSeries g(order);
  for (std::size_t n = 1; n <= order; ++n) g[n] = mpq_class(terms[n - 1], static_cast<unsigned long>(n));
  for (std::size_t n = 1; n <= order; ++n) g[n].canonicalize();
  return g.exp();
}

PowerSeries binomial_factor(std::size_t d, const mpq_class& e, std::size_t order) {
  if (d == 0) throw InputError("factor degree must be positive");
  PowerSeries s(order);
  mpq_class c = 1;
  s[0] = 1;
  // coefficient of z^{dj} is (−1)^j C(e, j) = c_{j−1}·(j − 1 − e)/j
  for (std::size_t j = 1; j * d <= order; ++j) {
    c = c * (mpq_class(static_cast<unsigned long>(j - 1)) - e) / static_cast<unsigned long>(j);
    s[j * d] = c;
  }
  return s;
}

std::vector<std::string> coefficient_strings(const PowerSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coefficients()) out.push_back(c.get_str());
  return out;
}

std::string to_string(const PowerSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    const mpq_class& c = s[i];
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    const bool unit = mag == 1;
    // "(1/2)z^2" rather than the ambiguous "1/2z^2"
    if (i == 0 || mag.get_den() == 1) {
      if (i == 0 || !unit) out << mag.get_str();
    } else {
      out << '(' << mag.get_str() << ')';
    }
    if (i >= 1) out << 'z';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  if (first) out << '0';
  out << "+O(z^" << s.order() + 1 << ')';
  return out.str();
}

} // namespace twisted
