#include "twisted/int_matrix.hpp"

#include <sstream>

#include "twisted/error.hpp"

namespace twisted {

IntPoly& IntPoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return *this;
}

IntPoly IntPoly::reversed() const {
  IntPoly r{{coeffs.rbegin(), coeffs.rend()}};
  return r;
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  IntPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

std::string to_string(const IntPoly& p, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const mpz_class& c = p.coeffs[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return first ? "0" : out.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InputError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries; the matrix must be square of size " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != n_) throw InputError("vector length does not match matrix size");
  IntVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::power(unsigned k) const {
  IntMatrix result = identity(n_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

mpz_class IntMatrix::trace() const {
  mpz_class t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

mpz_class IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  IntMatrix m = *this;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n_ && m(r, k) == 0) ++r;
      if (r == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n_ - 1, n_ - 1);
}

namespace {

// Faddeev–LeVerrier. Returns the monic characteristic polynomial and the
// final auxiliary matrix M_n, from which the adjugate follows.
std::pair<IntPoly, IntMatrix> faddeev_leverrier(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntPoly p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[n] = 1;
  IntMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += p.coeffs[n - k + 1];
    m = std::move(next);
    mpz_class t = (a * m).trace();
    mpz_class c = -t;
    mpz_class kk = static_cast<unsigned long>(k);
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), kk.get_mpz_t());
    p.coeffs[n - k] = c;
  }
  return {p, m};
}

} // namespace

IntMatrix IntMatrix::adjugate() const {
  if (n_ == 0) return IntMatrix(0);
  auto [p, m] = faddeev_leverrier(*this);
  if (n_ % 2 == 0) {
    for (auto& e : m.entries_) e = -e;
  }
  return m;
}

bool IntMatrix::is_unimodular() const { return abs(determinant()) == 1; }

std::vector<std::vector<mpz_class>> IntMatrix::rows() const {
  std::vector<std::vector<mpz_class>> out(n_, std::vector<mpz_class>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix size mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix size mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix size mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
  return c;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) s += ',';
      s += m(i, j).get_str();
    }
    s += ']';
  }
  return s + "]";
}

std::string to_string(const IntVector& v) {
  if (v.size() == 1) return v[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

IntPoly char_poly(const IntMatrix& a) { return faddeev_leverrier(a).first; }

IntPoly det_one_minus_z(const IntMatrix& a) { return char_poly(a).reversed(); }

} // namespace twisted
