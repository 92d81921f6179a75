#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twisted/automorphism.hpp"
#include "twisted/group.hpp"

namespace twisted {

/// A partition of group elements with classes numbered by their smallest
/// element, so two partitions of the same set compare bit-for-bit.
struct Partition {
  std::vector<std::size_t> class_of;
  std::vector<Element> representatives;  // smallest element of each class

  std::size_t class_count() const noexcept { return representatives.size(); }
  std::vector<std::vector<Element>> classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Orbits of x -> g·x·φ(g)^{-1}, together with the twisting automorphism.
struct TwistedPartition {
  Automorphism automorphism;
  Partition partition;

  std::size_t class_count() const noexcept { return partition.class_count(); }
  std::size_t class_of(Element x) const { return partition.class_of[x]; }
};

enum class ProcessingOrder { ascending, descending };

/// Ordinary conjugacy classes, from conjugation by the group's generators.
Partition conjugacy_classes(const FiniteGroup& g);

/// Twisted classes by union-find over every (g, x) pair. The result does not
/// depend on `order`; the parameter exists so that can be checked.
TwistedPartition twisted_classes(const Automorphism& phi,
                                 ProcessingOrder order = ProcessingOrder::ascending);

/// R(φ) for a finite group: the number of twisted classes.
std::size_t reidemeister_number(const Automorphism& phi);

/// R(φ^1), ..., R(φ^n).
std::vector<std::size_t> reidemeister_numbers_of_powers(const Automorphism& phi, std::size_t n);

struct TwistedDecision {
  bool equivalent = false;
  std::optional<Element> witness;  // g with y = g·x·φ(g)^{-1}
};

/// Decides whether y = g·x·φ(g)^{-1} for some g. A positive answer carries the
/// smallest such g, re-checked by multiplication.
TwistedDecision twisted_decide_finite(const Automorphism& phi, Element x, Element y);
TwistedDecision twisted_decide_finite(const TwistedPartition& classes, Element x, Element y);

/// σ with φ(C_j) = C_{σ(j)} on ordinary conjugacy classes.
std::vector<std::size_t> class_permutation(const Automorphism& phi, const Partition& conjugacy);

/// Number of ordinary conjugacy classes C with φ(C) = C.
std::size_t invariant_class_count(const Automorphism& phi);
std::size_t invariant_class_count(const Automorphism& phi, const Partition& conjugacy);

} // namespace twisted
