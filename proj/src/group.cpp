#include "twisted/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "twisted/error.hpp"

namespace twisted {

namespace {

constexpr std::size_t kStorageCap = 65535;

std::uint64_t fnv1a(std::size_t order, const std::vector<std::uint16_t>& table) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int shift = 0; shift < 64; shift += 8) mix((order >> shift) & 0xff);
  for (auto v : table) {
    mix(v & 0xff);
    mix(v >> 8);
  }
  return h;
}

void check_latin_square(std::size_t n, const std::vector<std::uint16_t>& table) {
  std::vector<std::size_t> seen(n, 0);
  std::size_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      auto v = table[a * n + b];
      if (v >= n) throw InputError("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") = " + std::to_string(v) + " is out of range");
      if (seen[v] == stamp) throw InputError("row " + std::to_string(a) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  stamp = 0;
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      auto v = table[a * n + b];
      if (seen[v] == stamp) throw InputError("column " + std::to_string(b) + " is not a permutation");
      seen[v] = stamp;
    }
  }
}

void check_associativity(std::size_t n, const std::vector<std::uint16_t>& table,
                         std::uint64_t seed) {
  auto mul = [&](std::size_t a, std::size_t b) -> std::size_t { return table[a * n + b]; };
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw InputError("table is not associative: (a*b)*c != a*(b*c) for a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ", c=" + std::to_string(c));
  };
  if (n <= kExhaustiveAssociativityCap) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) fail(a, b, c);
      }
    return;
  }
  std::mt19937_64 rng(seed);
  const std::size_t samples = 10 * n * n;
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t a = rng() % n, b = rng() % n, c = rng() % n;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
  }
}

std::vector<bool> closure_mask(std::size_t n, const std::vector<std::uint16_t>& table,
                               std::span<const Element> gens) {
  std::vector<bool> in(n, false);
  std::vector<Element> queue{0};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (Element s : gens) {
      Element y = table[static_cast<std::size_t>(x) * n + s];
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

std::vector<Element> greedy_generators(std::size_t n, const std::vector<std::uint16_t>& table,
                                       const std::vector<std::size_t>& orders) {
  std::vector<Element> gens;
  std::vector<bool> in(n, false);
  in[0] = true;
  std::size_t covered = 1;
  while (covered < n) {
    Element best = 0;
    std::size_t best_order = 0;
    for (Element a = 0; a < n; ++a)
      if (!in[a] && orders[a] > best_order) {
        best = a;
        best_order = orders[a];
      }
    gens.push_back(best);
    in = closure_mask(n, table, gens);
    covered = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  }
  return gens;
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::ostringstream out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = perm[j];
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

} // namespace

GroupPtr FiniteGroup::create(std::size_t order, std::vector<std::uint16_t> table,
                             std::vector<Element> generators, std::vector<std::string> names,
                             std::string description, bool check_assoc) {
  if (order == 0) throw InputError("group order must be positive");
  if (order > kStorageCap)
    throw InputError("group order " + std::to_string(order) + " exceeds storage cap " +
                     std::to_string(kStorageCap));
  if (table.size() != order * order) throw InputError("table size does not match order");
  if (!names.empty() && names.size() != order)
    throw InputError("element_names has " + std::to_string(names.size()) + " entries, expected " +
                     std::to_string(order));

  check_latin_square(order, table);
  for (std::size_t a = 0; a < order; ++a)
    if (table[a] != a || table[a * order] != a)
      throw InputError("element 0 is not an identity (fails at element " + std::to_string(a) + ")");

  auto hash = fnv1a(order, table);
  if (check_assoc) check_associativity(order, table, hash);

  auto g = std::make_shared<FiniteGroup>(Token{}, order, std::move(table), std::move(generators),
                                         std::move(names), std::move(description));
  g->hash_ = hash;
  return g;
}

FiniteGroup::FiniteGroup(Token, std::size_t order, std::vector<std::uint16_t> table,
                         std::vector<Element> generators, std::vector<std::string> names,
                         std::string description)
    : order_(order),
      table_(std::move(table)),
      inverses_(order),
      names_(std::move(names)),
      description_(std::move(description)) {
  for (Element a = 0; a < order_; ++a) {
    const auto* row = &table_[static_cast<std::size_t>(a) * order_];
    Element b = static_cast<Element>(std::find(row, row + order_, 0) - row);
    if (mul(b, a) != 0)
      throw InputError("element " + std::to_string(a) + " has no two-sided inverse");
    inverses_[a] = b;
  }

  element_orders_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    element_orders_[a] = k;
  }
  exponent_ = 1;
  for (auto o : element_orders_) exponent_ = std::lcm(exponent_, o);

  generators.erase(std::remove(generators.begin(), generators.end(), Element{0}), generators.end());
  if (generators.empty() && order_ > 1) {
    generators_ = greedy_generators(order_, table_, element_orders_);
  } else {
    for (Element s : generators)
      if (s >= order_) throw InputError("generator index out of range");
    auto in = closure_mask(order_, table_, generators);
    if (std::find(in.begin(), in.end(), false) != in.end())
      throw InputError("declared generators do not generate the group");
    generators_ = std::move(generators);
  }
}

std::string FiniteGroup::element_name(Element a) const {
  if (!names_.empty()) return names_[a];
  return std::to_string(a);
}

std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Element>> rows(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) rows[a][b] = table_[a * order_ + b];
  return rows;
}

std::vector<bool> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> queue{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group needs n >= 1");
  if (n > kClosureCap) throw InputError("cyclic group order exceeds cap");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::create(n, std::move(table), std::move(gens), {},
                             "cyclic(" + std::to_string(n) + ")", false);
}

GroupPtr dihedral_group(std::size_t n) {
  if (n < 3) throw InputError("dihedral group needs n >= 3");
  if (2 * n > kClosureCap) throw InputError("dihedral group order exceeds cap");
  const std::size_t order = 2 * n;
  std::vector<std::uint16_t> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t e = x / n, a = x % n;
    names[x] = (a == 0 ? std::string(e ? "" : "e") : "r^" + std::to_string(a)) +
               (e ? (a == 0 ? "s" : " s") : "");
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t f = y / n, b = y % n;
      // r^a s^e r^b s^f = r^{a + (-1)^e b} s^{e+f}
      std::size_t k = e ? (a + n - b) % n : (a + b) % n;
      table[x * order + y] = static_cast<std::uint16_t>(((e + f) % 2) * n + k);
    }
  }
  return FiniteGroup::create(order, std::move(table), {1, static_cast<Element>(n)},
                             std::move(names), "dihedral(" + std::to_string(n) + ")", false);
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) throw InputError("symmetric group needs 1 <= n <= 6");
  std::vector<std::vector<std::size_t>> gens;
  if (n >= 2) {
    std::vector<std::size_t> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(swap);
    if (n > 2) gens.push_back(cycle);
  }
  auto closure = permutation_group(n, gens);
  // Re-wrap with the conventional description.
  auto rows = closure->table_rows();
  std::vector<std::uint16_t> table;
  table.reserve(rows.size() * rows.size());
  for (auto& r : rows)
    for (auto v : r) table.push_back(static_cast<std::uint16_t>(v));
  std::vector<std::string> names;
  for (Element a = 0; a < closure->order(); ++a) names.push_back(closure->element_name(a));
  std::vector<Element> g(closure->generators().begin(), closure->generators().end());
  return FiniteGroup::create(closure->order(), std::move(table), std::move(g), std::move(names),
                             "symmetric(" + std::to_string(n) + ")", false);
}

GroupPtr group_from_table(std::vector<std::vector<Element>> rows, std::vector<std::string> names) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("table is empty");
  if (n > kStorageCap) throw InputError("table order exceeds storage cap");
  std::vector<std::uint16_t> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw InputError("row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                       " entries, expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n)
        throw InputError("entry (" + std::to_string(a) + "," + std::to_string(b) +
                         ") is out of range");
      table.push_back(static_cast<std::uint16_t>(rows[a][b]));
    }
  }
  return FiniteGroup::create(n, std::move(table), {}, std::move(names),
                             "table(" + std::to_string(n) + ")", true);
}

GroupPtr permutation_group(std::size_t degree,
                           const std::vector<std::vector<std::size_t>>& generators) {
  if (degree == 0 || degree > 16) throw InputError("permutation degree must be in 1..16");
  using Code = std::uint64_t;
  auto encode = [degree](const std::vector<std::size_t>& p) {
    Code c = 0;
    for (std::size_t i = 0; i < degree; ++i) c |= static_cast<Code>(p[i]) << (4 * i);
    return c;
  };
  auto image = [](Code c, std::size_t i) -> std::size_t { return (c >> (4 * i)) & 0xf; };
  // (a·b)(i) = a(b(i))
  auto compose = [&](Code a, Code b) {
    Code c = 0;
    for (std::size_t i = 0; i < degree; ++i)
      c |= static_cast<Code>(image(a, image(b, i))) << (4 * i);
    return c;
  };

  std::vector<Code> gens;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& p = generators[gi];
    if (p.size() != degree)
      throw InputError("generator " + std::to_string(gi) + " has length " +
                       std::to_string(p.size()) + ", expected degree " + std::to_string(degree));
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v])
        throw InputError("generator " + std::to_string(gi) + " is not a permutation");
      hit[v] = true;
    }
    gens.push_back(encode(p));
  }

  std::vector<std::size_t> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Code> elems{encode(id)};
  std::vector<std::size_t> parent{0}, via{0};
  std::unordered_map<Code, Element> index{{elems[0], 0}};
  std::vector<std::vector<Element>> rmul;  // rmul[x][j] = x * gens[j]
  for (std::size_t head = 0; head < elems.size(); ++head) {
    rmul.emplace_back(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Code y = compose(elems[head], gens[j]);
      auto [it, inserted] = index.emplace(y, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= kClosureCap)
          throw InputError("permutation closure exceeds cap of " + std::to_string(kClosureCap) +
                           " elements");
        elems.push_back(y);
        parent.push_back(head);
        via.push_back(j);
      }
      rmul[head][j] = it->second;
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<std::uint16_t>(a);
    // b = parent(b)·s, so a·b = (a·parent(b))·s; parents precede children.
    for (std::size_t b = 1; b < n; ++b)
      table[a * n + b] = static_cast<std::uint16_t>(rmul[table[a * n + parent[b]]][via[b]]);
  }

  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> p(degree);
    for (std::size_t i = 0; i < degree; ++i) p[i] = image(elems[a], i);
    names[a] = cycle_notation(p);
  }
  std::vector<Element> gen_elems;
  for (Code c : gens) {
    Element e = index.at(c);
    if (e != 0 && std::find(gen_elems.begin(), gen_elems.end(), e) == gen_elems.end())
      gen_elems.push_back(e);
  }
  return FiniteGroup::create(n, std::move(table), std::move(gen_elems), std::move(names),
                             "permutation(degree " + std::to_string(degree) + ", order " +
                                 std::to_string(n) + ")",
                             false);
}

GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right) {
  if (!left || !right) throw InputError("direct product needs two groups");
  const std::size_t m = left->order(), k = right->order(), n = m * k;
  if (n > kStorageCap) throw InputError("direct product order exceeds storage cap");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto a = left->mul(static_cast<Element>(x / k), static_cast<Element>(y / k));
      auto b = right->mul(static_cast<Element>(x % k), static_cast<Element>(y % k));
      table[x * n + y] = static_cast<std::uint16_t>(a * k + b);
    }
  std::vector<Element> gens;
  for (Element s : left->generators()) gens.push_back(static_cast<Element>(s * k));
  for (Element s : right->generators()) gens.push_back(s);
  std::vector<std::string> names;
  if (left->has_element_names() || right->has_element_names()) {
    names.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      names.push_back("(" + left->element_name(static_cast<Element>(x / k)) + "," +
                      right->element_name(static_cast<Element>(x % k)) + ")");
  }
  return FiniteGroup::create(n, std::move(table), std::move(gens), std::move(names),
                             left->description() + " x " + right->description(), false);
}

GroupPtr build_group(const GroupSpec& spec) {
  struct Visitor {
    GroupPtr operator()(const CyclicSpec& s) const { return cyclic_group(s.n); }
    GroupPtr operator()(const DihedralSpec& s) const { return dihedral_group(s.n); }
    GroupPtr operator()(const SymmetricSpec& s) const { return symmetric_group(s.n); }
    GroupPtr operator()(const TableSpec& s) const { return group_from_table(s.rows, s.names); }
    GroupPtr operator()(const PermutationSpec& s) const {
      return permutation_group(s.degree, s.generators);
    }
    GroupPtr operator()(const ProductSpec& s) const { return direct_product(s.left, s.right); }
  };
  return std::visit(Visitor{}, spec);
}

} // namespace twisted
