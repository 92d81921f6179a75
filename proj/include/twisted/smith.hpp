#pragma once

#include <vector>

#include "twisted/int_matrix.hpp"

namespace twisted {

/// U·A·V = D with U, V unimodular and D = diag(d_1, ..., d_n), d_i ≥ 0,
/// d_i | d_{i+1}, zeros trailing.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<mpz_class> diagonal() const;
};

/// Deterministic: the pivot is the smallest nonzero |entry| of the active
/// submatrix, ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& a);

/// Upper-triangular basis (positive diagonal, entries above each pivot
/// reduced into [0, pivot)) of the full-rank lattice spanned by `generators`
/// (row vectors of length n). Throws InputError if the span has rank < n.
IntMatrix hermite_basis(const std::vector<IntVector>& generators, std::size_t n);

/// The unique representative of v modulo the lattice with Hermite basis `h`,
/// with 0 ≤ r_i < h(i,i).
IntVector reduce_modulo_lattice(const IntMatrix& h, IntVector v);

} // namespace twisted
