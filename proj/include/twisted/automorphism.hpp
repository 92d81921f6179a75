#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twisted/group.hpp"

namespace twisted {

/// A bijective endomorphism of a finite group, stored as the image of every
/// element. Construction always validates bijectivity and multiplicativity.
class Automorphism {
public:
  static Automorphism from_images(GroupPtr group, std::vector<Element> images);

  /// Unique multiplicative extension of gens[i] -> images[i]. The extension is
  /// built breadth-first over the generated subgroup, checking every edge
  /// x -> x*s; the first inconsistency aborts.
  static Automorphism from_generator_images(GroupPtr group, std::span<const Element> gens,
                                            std::span<const Element> images);

  static Automorphism identity(GroupPtr group);
  /// x -> h x h^{-1}
  static Automorphism inner(GroupPtr group, Element h);

  Element operator()(Element x) const noexcept { return images_[x]; }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::span<const Element> images() const noexcept { return images_; }

  /// (*this)∘other, i.e. x -> this(other(x)).
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;
  /// Any integer power; negative exponents use the inverse.
  Automorphism power(long long k) const;
  std::size_t order() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Automorphism& a, const Automorphism& b) noexcept {
    return a.group_ == b.group_ && a.images_ == b.images_;
  }

private:
  Automorphism(GroupPtr group, std::vector<Element> images)
      : group_(std::move(group)), images_(std::move(images)) {}

  GroupPtr group_;
  std::vector<Element> images_;
};

/// Result of extending a generator assignment to a homomorphism.
struct HomomorphismExtension {
  enum class Status { ok, inconsistent, not_generating };
  Status status = Status::ok;
  std::vector<Element> images;  // valid when status == ok
};

/// Extends gens[i] -> images[i] (elements of `source` -> elements of `target`)
/// along every edge x -> x*s of the generated subgroup. Non-throwing; used by
/// the automorphism constructor, by automorphism enumeration and by the
/// isomorphism checks in tests.
HomomorphismExtension extend_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                          std::span<const Element> gens,
                                          std::span<const Element> images);

/// Largest group for which the full automorphism group is enumerated.
inline constexpr std::size_t kAutomorphismEnumerationCap = 256;

/// The complete automorphism group, sorted lexicographically by images
/// (so the identity comes first). Backtracks over generator images of
/// matching element order, pruning on partial extensions.
std::vector<Automorphism> enumerate_automorphisms(const GroupPtr& group);

/// G ⋊_φ Z_m with product (g,k)(h,l) = (g·φ^k(h), k+l mod m) and element
/// (g,k) at index k·|G| + g. Requires φ^m = id and |G|·m ≤ kClosureCap.
GroupPtr semidirect_with_cyclic(const Automorphism& phi, std::size_t m);

} // namespace twisted
