#include "twisted/classes.hpp"

#include <numeric>

#include "twisted/error.hpp"

namespace twisted {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root wins, so every root is the minimum of its set.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::size_t> parent_;
};

Partition canonical_partition(DisjointSets& sets, std::size_t n) {
  Partition p;
  p.class_of.assign(n, 0);
  std::vector<std::size_t> class_of_root(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    auto r = sets.find(x);
    if (class_of_root[r] == n) {
      class_of_root[r] = p.representatives.size();
      p.representatives.push_back(static_cast<Element>(x));
    }
    p.class_of[x] = class_of_root[r];
  }
  return p;
}

} // namespace

std::vector<std::vector<Element>> Partition::classes() const {
  std::vector<std::vector<Element>> out(representatives.size());
  for (std::size_t x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(static_cast<Element>(x));
  return out;
}

Partition conjugacy_classes(const FiniteGroup& g) {
  DisjointSets sets(g.order());
  for (Element x = 0; x < g.order(); ++x)
    for (Element s : g.generators()) sets.unite(x, g.mul(g.mul(s, x), g.inv(s)));
  return canonical_partition(sets, g.order());
}

TwistedPartition twisted_classes(const Automorphism& phi, ProcessingOrder order) {
  const auto& g = phi.group();
  const std::size_t n = g.order();
  DisjointSets sets(n);
  auto visit = [&](Element x) {
    for (Element h = 0; h < n; ++h) sets.unite(x, g.mul(g.mul(h, x), g.inv(phi(h))));
  };
  if (order == ProcessingOrder::ascending) {
    for (Element x = 0; x < n; ++x) visit(x);
  } else {
    for (Element x = static_cast<Element>(n); x-- > 0;) visit(x);
  }
  return TwistedPartition{phi, canonical_partition(sets, n)};
}

std::size_t reidemeister_number(const Automorphism& phi) { return twisted_classes(phi).class_count(); }

std::vector<std::size_t> reidemeister_numbers_of_powers(const Automorphism& phi, std::size_t n) {
  std::vector<std::size_t> out;
  out.reserve(n);
  Automorphism power = phi;
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(reidemeister_number(power));
    power = power.compose(phi);
  }
  return out;
}

TwistedDecision twisted_decide_finite(const TwistedPartition& classes, Element x, Element y) {
  const auto& phi = classes.automorphism;
  const auto& g = phi.group();
  if (!g.contains(x) || !g.contains(y))
    throw InputError("element index out of range for a group of order " + std::to_string(g.order()));
  TwistedDecision d;
  if (classes.class_of(x) != classes.class_of(y)) return d;
  for (Element h = 0; h < g.order(); ++h) {
    if (g.mul(g.mul(h, x), g.inv(phi(h))) == y) {
      d.equivalent = true;
      d.witness = h;
      return d;
    }
  }
  throw VerificationError("twisted classes agree but no witness exists for " + std::to_string(x) +
                          " ~ " + std::to_string(y));
}

TwistedDecision twisted_decide_finite(const Automorphism& phi, Element x, Element y) {
  return twisted_decide_finite(twisted_classes(phi), x, y);
}

std::vector<std::size_t> class_permutation(const Automorphism& phi, const Partition& conjugacy) {
  const auto& g = phi.group();
  std::vector<std::size_t> sigma(conjugacy.class_count());
  std::vector<std::size_t> sizes(conjugacy.class_count(), 0);
  for (auto c : conjugacy.class_of) ++sizes[c];
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    sigma[j] = conjugacy.class_of[phi(conjugacy.representatives[j])];
    if (sizes[sigma[j]] != sizes[j])
      throw VerificationError("automorphism maps class " + std::to_string(j) +
                              " onto a class of different size");
  }
  for (Element x = 0; x < g.order(); ++x)
    if (conjugacy.class_of[phi(x)] != sigma[conjugacy.class_of[x]])
      throw VerificationError("automorphism does not permute conjugacy classes");
  return sigma;
}

std::size_t invariant_class_count(const Automorphism& phi, const Partition& conjugacy) {
  auto sigma = class_permutation(phi, conjugacy);
  std::size_t count = 0;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    if (sigma[j] == j) ++count;
  return count;
}

std::size_t invariant_class_count(const Automorphism& phi) {
  return invariant_class_count(phi, conjugacy_classes(phi.group()));
}

} // namespace twisted
