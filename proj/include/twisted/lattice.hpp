#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twisted/extended.hpp"
#include "twisted/int_matrix.hpp"
#include "twisted/smith.hpp"

namespace twisted {

/// R(φ^1), ..., R(φ^N) for a lattice automorphism, ∞ where det(I − M^k) = 0.
struct ReidemeisterSequence {
  std::vector<ExtendedNatural> terms;
  std::string source;
};

inline constexpr std::size_t kMaxSequenceLength = 64;

/// Throws InputError unless |det M| = 1.
void require_unimodular(const IntMatrix& m);

/// Index of (I − M)Z^n in Z^n: |det(I − M)|, or ∞ when it vanishes.
ExtendedNatural lattice_reidemeister(const IntMatrix& m);

/// |Z^n / A Z^n| from the Smith diagonal: the product of the d_i, ∞ if any is 0.
ExtendedNatural cokernel_order(const IntMatrix& a);

struct LatticeDecision {
  bool equivalent = false;
  std::optional<IntVector> witness;  // (I − M)g = y − x
};

/// x ~ y iff y − x ∈ (I − M)Z^n, decided on the Smith form of I − M.
LatticeDecision lattice_twisted_decide(const IntMatrix& m, const IntVector& x, const IntVector& y);

ReidemeisterSequence reidemeister_sequence(const IntMatrix& m, std::size_t length);

/// Wraps finite-group counts R(φ^k) as a sequence.
ReidemeisterSequence finite_sequence(const std::vector<std::size_t>& counts, std::string source);

} // namespace twisted
