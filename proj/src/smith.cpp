#include "twisted/smith.hpp"

#include <optional>
#include <utility>

#include "twisted/error.hpp"

namespace twisted {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.size(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.size(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t j = 0; j < m.size(); ++j) m(dst, j) += q * m(src, j);
}

// col_dst += q * col_src
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t i = 0; i < m.size(); ++i) m(i, dst) += q * m(i, src);
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& d, std::size_t s) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  for (std::size_t i = s; i < d.size(); ++i)
    for (std::size_t j = s; j < d.size(); ++j) {
      if (d(i, j) == 0) continue;
      mpz_class a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> d(D.size());
  for (std::size_t i = 0; i < D.size(); ++i) d[i] = D(i, i);
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t n = a.size();
  SmithForm f{IntMatrix::identity(n), a, IntMatrix::identity(n)};
  auto& d = f.D;

  for (std::size_t s = 0; s < n; ++s) {
    bool empty = false;
    for (;;) {
      auto pivot = smallest_pivot(d, s);
      if (!pivot) {
        empty = true;
        break;
      }
      swap_rows(d, s, pivot->first);
      swap_rows(f.U, s, pivot->first);
      swap_cols(d, s, pivot->second);
      swap_cols(f.V, s, pivot->second);

      bool clean = true;
      for (std::size_t i = s + 1; i < n; ++i) {
        if (d(i, s) == 0) continue;
        mpz_class q = -(d(i, s) / d(s, s));  // truncating; |remainder| < |pivot|
        add_row(d, i, s, q);
        add_row(f.U, i, s, q);
        if (d(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (d(s, j) == 0) continue;
        mpz_class q = -(d(s, j) / d(s, s));
        add_col(d, j, s, q);
        add_col(f.V, j, s, q);
        if (d(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = s + 1; i < n && divides; ++i)
        for (std::size_t j = s + 1; j < n; ++j)
          if (d(i, j) % d(s, s) != 0) {
            add_row(d, s, i, 1);
            add_row(f.U, s, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (empty) break;
    if (d(s, s) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        d(s, j) = -d(s, j);
        f.U(s, j) = -f.U(s, j);
      }
    }
  }
  return f;
}

IntMatrix hermite_basis(const std::vector<IntVector>& generators, std::size_t n) {
  std::vector<IntVector> rows = generators;
  for (const auto& r : rows)
    if (r.size() != n) throw InputError("lattice generator has wrong length");
  const std::size_t k = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < k; ++i)
        if (rows[i][c] != 0 && (!best || abs(rows[i][c]) < abs(rows[*best][c]))) best = i;
      if (!best) throw InputError("lattice generators do not span a full-rank lattice");
      std::swap(rows[r], rows[*best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] < 0)
      for (auto& e : rows[r]) e = -e;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  IntMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = rows[i][j];
  return h;
}

IntVector reduce_modulo_lattice(const IntMatrix& h, IntVector v) {
  const std::size_t n = h.size();
  if (v.size() != n) throw InputError("vector length does not match lattice dimension");
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class q = floor_div(v[i], h(i, i));
    if (q == 0) continue;
    for (std::size_t j = i; j < n; ++j) v[j] -= q * h(i, j);
  }
  return v;
}

} // namespace twisted
