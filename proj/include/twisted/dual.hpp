#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twisted/automorphism.hpp"
#include "twisted/classes.hpp"
#include "twisted/group.hpp"

namespace twisted {

inline constexpr std::size_t kDualOrderCap = 256;
inline constexpr std::uint64_t kPrimeSearchLimit = 1000000;

/// Conjugacy classes of G with their class-algebra structure constants.
///
/// The class sums K_i multiply as K_i K_j = Σ_k a[i][j][k] K_k, where
/// a[i][j][k] counts pairs (u, v) ∈ C_i × C_j with u·v equal to the fixed
/// representative (smallest element) of C_k. Classes are ordered by their
/// smallest element, so the identity class is class 0.
struct ClassData {
  Partition conjugacy;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> inverse_class;  // C_{j'} = {x^{-1} : x ∈ C_j}
  std::vector<std::uint32_t> constants;    // r*r*r, index (i*r + j)*r + k

  std::size_t class_count() const noexcept { return sizes.size(); }
  std::uint32_t structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t r = class_count();
    return constants[(i * r + j) * r + k];
  }
};

ClassData class_data(const FiniteGroup& g);

/// Central characters ω of the irreducible representations of G, reduced
/// modulo an admissible prime p (p ≡ 1 mod exp(G), p ∤ |G|). Row i is
/// (ω_i(K_1), ..., ω_i(K_r)); each row is a simultaneous eigenvector of the
/// class matrices (M_i)_{jk} = a[i][j][k] normalised so ω(K_identity) = 1.
/// Rows are sorted lexicographically.
struct CentralCharacterTable {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t group_hash = 0;
  std::vector<std::vector<std::uint64_t>> rows;
};

bool is_admissible_prime(const FiniteGroup& g, std::uint64_t p);
/// Smallest admissible prime strictly greater than `after`.
std::uint64_t admissible_prime(const FiniteGroup& g, std::uint64_t after = 0);

/// Joint eigenspace splitting over F_p: random combinations of the class
/// matrices first (seeded from the table hash), then the class matrices one
/// at a time. Throws VerificationError if a joint eigenspace of dimension > 1
/// survives, which cannot happen for a split semisimple class algebra.
CentralCharacterTable central_characters(const FiniteGroup& g, const ClassData& cd,
                                         std::optional<std::uint64_t> prime = std::nullopt);

/// The permutation of dual points induced by φ̂: row ω goes to ω∘σ, where σ
/// is the class permutation of φ.
std::vector<std::size_t> dual_permutation(const CentralCharacterTable& table,
                                          const std::vector<std::size_t>& sigma);

/// S_f(φ): rows with ω(C_j) = ω(C_{σ(j)}) for every class j.
std::size_t fixed_dual_count(const Automorphism& phi, const ClassData& cd,
                             const CentralCharacterTable& table);

/// Class data and central characters of one group, shared across automorphisms.
struct DualContext {
  GroupPtr group;
  ClassData classes;
  CentralCharacterTable table;
};

DualContext make_dual_context(const GroupPtr& group, std::optional<std::uint64_t> prime = std::nullopt);

struct TBFTReport {
  std::string group;
  std::string automorphism;
  std::size_t reidemeister = 0;
  std::size_t fixed_dual_points = 0;
  std::size_t invariant_classes = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  bool pass = false;           // reidemeister == fixed_dual_points
  bool brauer_agrees = false;  // invariant_classes equals both
};

TBFTReport verify_tbft(const Automorphism& phi, std::optional<std::uint64_t> prime = std::nullopt);
TBFTReport verify_tbft(const Automorphism& phi, const DualContext& context);

/// Images of the group's generators, e.g. "[1,4] -> [3,4]".
std::string describe_automorphism(const Automorphism& phi);

} // namespace twisted
