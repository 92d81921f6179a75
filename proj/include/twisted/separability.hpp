#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "twisted/automorphism.hpp"
#include "twisted/classes.hpp"
#include "twisted/int_matrix.hpp"

namespace twisted {

/// Twisted classes of G against the ordinary classes of Γ = G ⋊_φ Z_m that
/// meet the coset G·t, both as partitions of G (g stands for (g, 1)).
struct SemidirectReport {
  std::string group;
  std::string automorphism;
  std::size_t m = 1;
  std::size_t gamma_order = 0;
  std::size_t gamma_class_count = 0;
  Partition twisted;
  Partition coset;
  bool counts_equal = false;
  bool membership_consistent = false;

  bool pass() const noexcept { return counts_equal && membership_consistent; }
};

/// m defaults to the order of φ.
SemidirectReport verify_semidirect_bijection(const Automorphism& phi, std::optional<std::size_t> m = std::nullopt);

/// Largest k^n for which a separation or certificate is also re-checked by
/// orbit computation in the finite group (Z/k)^n.
inline constexpr std::uint64_t kFiniteRecheckCap = 4096;
/// Largest |det(I − M)| for which RP certificates enumerate class representatives.
inline constexpr std::uint64_t kCertificateCap = 1u << 20;
inline constexpr std::uint64_t kSeparationSearchCap = 10000000;

/// x and y become non-twisted-conjugate in (Z/k)^n under M mod k.
struct SeparationWitness {
  std::uint64_t k = 0;
  IntVector x_image;
  IntVector y_image;
  IntMatrix automorphism_mod_k;
  bool orbit_checked = false;  // also confirmed in the finite group (Z/k)^n
};

struct SeparationResult {
  enum class Status { separated, not_found, not_applicable };
  Status status = Status::not_found;
  std::uint64_t k_max = 0;
  std::optional<SeparationWitness> witness;
  std::optional<IntVector> equivalence_witness;  // when not applicable
};

std::string to_string(SeparationResult::Status status);

/// Smallest k in 2..k_max with y − x ∉ (I − M)(Z/k)^n. If x and y are
/// already twisted-conjugate over Z^n the result is not_applicable. k_max
/// defaults to |det(I − M)|, or 64 when that vanishes.
SeparationResult lattice_separation_search(const IntMatrix& m, const IntVector& x, const IntVector& y,
                                           std::optional<std::uint64_t> k_max = std::nullopt);

/// Re-checks a witness from scratch: Hermite reduction modulo (I − M)Z^n + kZ^n
/// and, when k^n is small, orbit computation in (Z/k)^n.
bool verify_separation_witness(const IntMatrix& m, const IntVector& x, const IntVector& y,
                               const SeparationWitness& w);

/// K = (Z/k)^n with k = |det(I − M)|, φ_K = M mod k and F = reduction mod k.
struct RPCertificate {
  std::uint64_t k = 0;
  IntMatrix automorphism_mod_k;
  IntMatrix cofactor;                    // X with (I − M)X = kI
  std::vector<IntVector> representatives;  // one per twisted class of Z^n, reduced mod k
  bool square_commutes = false;            // (a)
  bool kernel_contained = false;           // (b) kZ^n ⊆ (I − M)Z^n
  bool classes_disjoint = false;           // (c)
  bool orbit_checked = false;              // R(φ_K) = k confirmed by orbits in K

  bool verified() const noexcept { return square_commutes && kernel_contained && classes_disjoint; }
};

struct RPResult {
  bool infinite = false;  // det(I − M) = 0: no certificate is asked for
  std::optional<RPCertificate> certificate;
};

RPResult rp_certificate(const IntMatrix& m);

/// Checks (a)–(c) using only M and the certificate's data.
bool verify_rp_certificate(const IntMatrix& m, const RPCertificate& cert);

struct FiniteInstance {
  Automorphism phi;
  Element x;
  Element y;
};

struct LatticeInstance {
  IntMatrix m;
  IntVector x;
  IntVector y;
  bool want_separation = true;
};

using DehnInstance = std::variant<FiniteInstance, LatticeInstance>;

struct DehnDecision {
  bool equivalent = false;
  std::optional<Element> finite_witness;
  std::optional<IntVector> lattice_witness;
  std::optional<SeparationResult> separation;
};

DehnDecision twisted_dehn_decide(const DehnInstance& instance);

} // namespace twisted
