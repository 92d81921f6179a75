#include "twisted/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "twisted/error.hpp"

namespace twisted {

namespace {

constexpr Element kUnassigned = std::numeric_limits<Element>::max();

struct PartialExtension {
  bool consistent = true;
  std::vector<Element> images;  // kUnassigned outside the generated subgroup
};

PartialExtension extend_partial(const FiniteGroup& source, const FiniteGroup& target,
                                std::span<const Element> gens, std::span<const Element> images) {
  PartialExtension out;
  out.images.assign(source.order(), kUnassigned);
  out.images[source.identity()] = target.identity();
  std::vector<Element> queue{source.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Element y = source.mul(x, gens[j]);
      Element v = target.mul(out.images[x], images[j]);
      if (out.images[y] == kUnassigned) {
        out.images[y] = v;
        queue.push_back(y);
      } else if (out.images[y] != v) {
        out.consistent = false;
        return out;
      }
    }
  }
  return out;
}

bool injective_on_assigned(const std::vector<Element>& images, std::size_t target_order) {
  std::vector<bool> hit(target_order, false);
  for (Element v : images) {
    if (v == kUnassigned) continue;
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<Element> compose_images(std::span<const Element> outer, std::span<const Element> inner) {
  std::vector<Element> out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

} // namespace

HomomorphismExtension extend_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                          std::span<const Element> gens,
                                          std::span<const Element> images) {
  if (gens.size() != images.size())
    throw InputError("generator and image lists differ in length");
  for (Element s : gens)
    if (!source.contains(s)) throw InputError("generator index " + std::to_string(s) + " out of range");
  for (Element t : images)
    if (!target.contains(t)) throw InputError("image index " + std::to_string(t) + " out of range");

  auto partial = extend_partial(source, target, gens, images);
  HomomorphismExtension result;
  if (!partial.consistent) {
    result.status = HomomorphismExtension::Status::inconsistent;
    return result;
  }
  if (std::find(partial.images.begin(), partial.images.end(), kUnassigned) != partial.images.end()) {
    result.status = HomomorphismExtension::Status::not_generating;
    return result;
  }
  result.images = std::move(partial.images);
  return result;
}

Automorphism Automorphism::from_images(GroupPtr group, std::vector<Element> images) {
  if (!group) throw InputError("automorphism needs a group");
  const auto& g = *group;
  const std::size_t n = g.order();
  if (images.size() != n)
    throw InputError("automorphism has " + std::to_string(images.size()) + " images, expected " +
                     std::to_string(n));
  std::vector<bool> hit(n, false);
  for (Element v : images) {
    if (v >= n) throw InputError("image index " + std::to_string(v) + " out of range");
    if (hit[v]) throw InputError("map is not bijective: " + std::to_string(v) + " is hit twice");
    hit[v] = true;
  }
  if (images[g.identity()] != g.identity()) throw InputError("map does not fix the identity");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (images[g.mul(a, b)] != g.mul(images[a], images[b]))
        throw InputError("map is not multiplicative at (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
  return Automorphism(std::move(group), std::move(images));
}

Automorphism Automorphism::from_generator_images(GroupPtr group, std::span<const Element> gens,
                                                 std::span<const Element> images) {
  if (!group) throw InputError("automorphism needs a group");
  auto ext = extend_homomorphism(*group, *group, gens, images);
  switch (ext.status) {
    case HomomorphismExtension::Status::inconsistent:
      throw InputError("generator assignment is inconsistent: it does not extend to a homomorphism");
    case HomomorphismExtension::Status::not_generating:
      throw InputError("generators do not generate the group");
    case HomomorphismExtension::Status::ok:
      break;
  }
  return from_images(std::move(group), std::move(ext.images));
}

Automorphism Automorphism::identity(GroupPtr group) {
  if (!group) throw InputError("automorphism needs a group");
  std::vector<Element> images(group->order());
  std::iota(images.begin(), images.end(), Element{0});
  return Automorphism(std::move(group), std::move(images));
}

Automorphism Automorphism::inner(GroupPtr group, Element h) {
  if (!group) throw InputError("automorphism needs a group");
  if (!group->contains(h)) throw InputError("element " + std::to_string(h) + " out of range");
  std::vector<Element> images(group->order());
  for (Element x = 0; x < group->order(); ++x) images[x] = group->mul(group->mul(h, x), group->inv(h));
  return Automorphism(std::move(group), std::move(images));
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (group_ != other.group_ && !group_->same_table(*other.group_))
    throw InputError("cannot compose automorphisms of different groups");
  return Automorphism(group_, compose_images(images_, other.images_));
}

Automorphism Automorphism::inverse() const {
  std::vector<Element> inv(images_.size());
  for (Element x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return Automorphism(group_, std::move(inv));
}

Automorphism Automorphism::power(long long k) const {
  Automorphism base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Automorphism result = identity(group_);
  while (e) {
    if (e & 1ULL) result = Automorphism(group_, compose_images(result.images_, base.images_));
    base = Automorphism(group_, compose_images(base.images_, base.images_));
    e >>= 1;
  }
  return result;
}

std::size_t Automorphism::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Element x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Element y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Automorphism::is_identity() const noexcept {
  for (Element x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<Automorphism> enumerate_automorphisms(const GroupPtr& group) {
  if (!group) throw InputError("automorphism enumeration needs a group");
  const auto& g = *group;
  if (g.order() > kAutomorphismEnumerationCap)
    throw InputError("automorphism enumeration is limited to order <= " +
                     std::to_string(kAutomorphismEnumerationCap));

  const std::vector<Element> gens(g.generators().begin(), g.generators().end());
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.element_order(gens[i])) candidates[i].push_back(x);

  std::vector<Automorphism> found;
  std::vector<Element> chosen;
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      auto ext = extend_homomorphism(g, g, gens, chosen);
      if (ext.status != HomomorphismExtension::Status::ok) return;
      if (!injective_on_assigned(ext.images, g.order())) return;
      found.push_back(Automorphism::from_images(group, std::move(ext.images)));
      return;
    }
    for (Element c : candidates[depth]) {
      chosen.push_back(c);
      auto partial = extend_partial(g, g, std::span(gens).first(depth + 1), chosen);
      if (partial.consistent && injective_on_assigned(partial.images, g.order()))
        self(self, depth + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);

  std::sort(found.begin(), found.end(), [](const Automorphism& a, const Automorphism& b) {
    return std::lexicographical_compare(a.images().begin(), a.images().end(), b.images().begin(),
                                        b.images().end());
  });
  return found;
}

GroupPtr semidirect_with_cyclic(const Automorphism& phi, std::size_t m) {
  const auto& g = phi.group();
  const std::size_t n = g.order();
  if (m == 0) throw InputError("semidirect product needs m >= 1");
  if (n * m > kClosureCap)
    throw InputError("semidirect product order " + std::to_string(n * m) + " exceeds cap " +
                     std::to_string(kClosureCap));
  if (!phi.power(static_cast<long long>(m)).is_identity())
    throw InputError("phi^" + std::to_string(m) + " is not the identity");

  std::vector<std::vector<Element>> powers;  // powers[k] = images of φ^k
  powers.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto p = phi.power(static_cast<long long>(k));
    powers.emplace_back(p.images().begin(), p.images().end());
  }

  const std::size_t order = n * m;
  std::vector<std::uint16_t> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t k = x / n;
    const auto a = static_cast<Element>(x % n);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t l = y / n;
      const auto b = static_cast<Element>(y % n);
      table[x * order + y] =
          static_cast<std::uint16_t>(((k + l) % m) * n + g.mul(a, powers[k][b]));
    }
  }

  std::vector<Element> gens(g.generators().begin(), g.generators().end());
  if (m > 1) gens.push_back(static_cast<Element>(n));

  std::vector<std::string> names;
  if (m == 1) {
    if (g.has_element_names())
      for (Element a = 0; a < n; ++a) names.push_back(g.element_name(a));
  } else {
    names.reserve(order);
    for (std::size_t x = 0; x < order; ++x)
      names.push_back("(" + g.element_name(static_cast<Element>(x % n)) + "," +
                      std::to_string(x / n) + ")");
  }
  return FiniteGroup::create(order, std::move(table), std::move(gens), std::move(names),
                             "semidirect(" + g.description() + ", m=" + std::to_string(m) + ")",
                             false);
}

} // namespace twisted
