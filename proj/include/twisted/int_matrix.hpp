#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twisted {

using IntVector = std::vector<mpz_class>;

/// Integer polynomial, coefficients from the constant term upwards.
struct IntPoly {
  std::vector<mpz_class> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// Drops trailing zero coefficients.
  IntPoly& normalize();
  /// Coefficients reversed: z^deg · p(1/z).
  IntPoly reversed() const;
  mpz_class operator()(const mpz_class& x) const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs == b.coeffs; }
};

/// Renders with variable `var`, e.g. "1-3z+z^2".
std::string to_string(const IntPoly& p, char var = 'x');

/// Square matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static IntMatrix identity(std::size_t n);
  /// Throws InputError unless `rows` is square.
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  std::size_t size() const noexcept { return n_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  IntVector apply(const IntVector& v) const;
  IntMatrix transpose() const;
  IntMatrix power(unsigned k) const;
  mpz_class trace() const;
  /// Fraction-free (Bareiss) elimination.
  mpz_class determinant() const;
  /// adj(A) with A·adj(A) = det(A)·I.
  IntMatrix adjugate() const;
  bool is_unimodular() const;
  std::vector<std::vector<mpz_class>> rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  std::size_t n_ = 0;
  std::vector<mpz_class> entries_;
};

/// "[[2,1],[1,1]]"
std::string to_string(const IntMatrix& m);
/// "(1,2)" for length > 1, "2" for length 1.
std::string to_string(const IntVector& v);

/// det(xI − A) by Faddeev–LeVerrier with exact integer division; monic.
IntPoly char_poly(const IntMatrix& a);

/// det(I − zA) as a polynomial in z: the reversed characteristic polynomial.
IntPoly det_one_minus_z(const IntMatrix& a);

} // namespace twisted
