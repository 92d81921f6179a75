#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace twisted {

using Element = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Largest group produced by permutation closure or semidirect products.
inline constexpr std::size_t kClosureCap = 20000;
/// Tables above this order have associativity checked by sampling.
inline constexpr std::size_t kExhaustiveAssociativityCap = 512;

/// A finite group stored as a dense Cayley table.
///
/// The identity is always element 0. Instances are immutable once built and
/// are shared through GroupPtr, so automorphisms and partitions can hold on to
/// the group they describe.
class FiniteGroup {
  struct Token {};

public:
  FiniteGroup(Token, std::size_t order, std::vector<std::uint16_t> table,
              std::vector<Element> generators, std::vector<std::string> names,
              std::string description);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverses_[a]; }

  /// A generating set; always non-empty for order > 1, empty for the trivial group.
  std::span<const Element> generators() const noexcept { return generators_; }

  std::size_t element_order(Element a) const noexcept { return element_orders_[a]; }
  std::size_t exponent() const noexcept { return exponent_; }

  /// Display string for an element; falls back to its index.
  std::string element_name(Element a) const;
  bool has_element_names() const noexcept { return !names_.empty(); }

  /// Short human description such as "cyclic(4)" or "table(8)".
  const std::string& description() const noexcept { return description_; }

  /// FNV-1a hash of the multiplication table; seeds reproducible randomness.
  std::uint64_t table_hash() const noexcept { return hash_; }

  bool contains(Element a) const noexcept { return a < order_; }

  std::vector<std::vector<Element>> table_rows() const;

  /// Exact equality of multiplication tables.
  bool same_table(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

  /// Validating factory used by every builder. The Latin-square, identity
  /// and inverse invariants are always checked; associativity only when
  /// requested (builders whose tables are associative by construction skip it).
  /// An empty `generators` list asks for a greedy generating set.
  static GroupPtr create(std::size_t order, std::vector<std::uint16_t> table,
                         std::vector<Element> generators, std::vector<std::string> names,
                         std::string description, bool check_associativity);

private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverses_;
  std::vector<Element> generators_;
  std::vector<std::size_t> element_orders_;
  std::size_t exponent_ = 1;
  std::vector<std::string> names_;
  std::string description_;
  std::uint64_t hash_ = 0;
};

struct CyclicSpec {
  std::size_t n;
};
struct DihedralSpec {
  std::size_t n;  // order 2n
};
struct SymmetricSpec {
  std::size_t n;
};
struct TableSpec {
  std::vector<std::vector<Element>> rows;
  std::vector<std::string> names;
};
struct PermutationSpec {
  std::size_t degree;
  std::vector<std::vector<std::size_t>> generators;  // images of 0..degree-1
};
struct ProductSpec {
  GroupPtr left;
  GroupPtr right;
};

using GroupSpec =
    std::variant<CyclicSpec, DihedralSpec, SymmetricSpec, TableSpec, PermutationSpec, ProductSpec>;

GroupPtr build_group(const GroupSpec& spec);

GroupPtr cyclic_group(std::size_t n);
/// Elements r^k s^e at index e*n + k; rotations first.
GroupPtr dihedral_group(std::size_t n);
GroupPtr symmetric_group(std::size_t n);
/// Validates the table fully: Latin square, identity at 0, inverses, associativity.
GroupPtr group_from_table(std::vector<std::vector<Element>> rows,
                          std::vector<std::string> names = {});
/// Closure of the generated permutation group in BFS order, identity first.
GroupPtr permutation_group(std::size_t degree,
                           const std::vector<std::vector<std::size_t>>& generators);
/// Pairs (a, b) at index a*|H| + b.
GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right);

/// Subgroup generated by `gens`, as a membership mask.
std::vector<bool> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);

} // namespace twisted
