#include "twisted/separability.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "twisted/dual.hpp"
#include "twisted/error.hpp"
#include "twisted/lattice.hpp"
#include "twisted/smith.hpp"

namespace twisted {

namespace {

Partition canonical_partition(const std::vector<std::size_t>& labels) {
  Partition p;
  p.class_of.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = renumber.emplace(labels[x], p.representatives.size());
    if (inserted) p.representatives.push_back(static_cast<Element>(x));
    p.class_of[x] = it->second;
  }
  return p;
}

mpz_class mod(const mpz_class& a, const mpz_class& k) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
  return r;
}

IntVector reduce_vector(const IntVector& v, const mpz_class& k) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod(v[i], k);
  return out;
}

IntMatrix reduce_matrix(const IntMatrix& m, const mpz_class& k) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = mod(m(i, j), k);
  return out;
}

void require_dimensions(const IntMatrix& m, const IntVector& x, const IntVector& y) {
  if (x.size() != m.size() || y.size() != m.size())
    throw InputError("vector length does not match matrix dimension " + std::to_string(m.size()));
}

// Hermite basis of (I − M)Z^n + kZ^n.
IntMatrix quotient_lattice(const IntMatrix& a, const mpz_class& k) {
  const std::size_t n = a.size();
  std::vector<IntVector> gens;
  const IntMatrix at = a.transpose();
  for (const auto& row : at.rows()) gens.push_back(row);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = k;
    gens.push_back(std::move(e));
  }
  return hermite_basis(gens, n);
}

std::optional<std::uint64_t> small_power(std::uint64_t k, std::size_t n, std::uint64_t cap) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (p > cap / std::max<std::uint64_t>(k, 1)) return std::nullopt;
    p *= k;
  }
  return p;
}

// (Z/k)^n as an iterated direct product, coordinate 0 most significant.
struct FiniteQuotient {
  GroupPtr group;
  std::size_t n;
  std::uint64_t k;

  Element encode(const IntVector& v) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * k + mod(v[i], mpz_class(static_cast<unsigned long>(k))).get_ui();
    return static_cast<Element>(idx);
  }
  IntVector decode(Element e) const {
    IntVector v(n);
    std::uint64_t idx = e;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<unsigned long>(idx % k);
      idx /= k;
    }
    return v;
  }
};

FiniteQuotient finite_quotient(std::size_t n, std::uint64_t k) {
  GroupPtr g = cyclic_group(k);
  for (std::size_t i = 1; i < n; ++i) g = direct_product(g, cyclic_group(k));
  return {g, n, k};
}

Automorphism quotient_automorphism(const FiniteQuotient& q, const IntMatrix& m) {
  std::vector<Element> images(q.group->order());
  for (Element e = 0; e < q.group->order(); ++e) images[e] = q.encode(m.apply(q.decode(e)));
  return Automorphism::from_images(q.group, std::move(images));
}

} // namespace

SemidirectReport verify_semidirect_bijection(const Automorphism& phi, std::optional<std::size_t> m) {
  const auto& g = phi.group();
  SemidirectReport r;
  r.group = g.description();
  r.automorphism = describe_automorphism(phi);
  r.m = m ? *m : phi.order();
  const GroupPtr gamma = semidirect_with_cyclic(phi, r.m);
  r.gamma_order = gamma->order();

  const Partition gamma_classes = conjugacy_classes(*gamma);
  r.gamma_class_count = gamma_classes.class_count();
  const std::size_t offset = (1 % r.m) * g.order();
  std::vector<std::size_t> labels(g.order());
  for (Element x = 0; x < g.order(); ++x) labels[x] = gamma_classes.class_of[offset + x];
  r.coset = canonical_partition(labels);

  // Γ-classes meeting G·t must lie inside it, since Γ → Z_m is a homomorphism.
  std::set<std::size_t> meeting(labels.begin(), labels.end());
  for (Element z = 0; z < gamma->order(); ++z)
    if (meeting.count(gamma_classes.class_of[z]) && z / g.order() != offset / g.order())
      throw VerificationError("a conjugacy class of the semidirect product leaves the coset G.t");

  r.twisted = twisted_classes(phi).partition;
  r.counts_equal = r.twisted.class_count() == r.coset.class_count();
  r.membership_consistent = r.twisted == r.coset;
  return r;
}

std::string to_string(SeparationResult::Status status) {
  switch (status) {
    case SeparationResult::Status::separated: return "separated";
    case SeparationResult::Status::not_found: return "not-found";
    case SeparationResult::Status::not_applicable: return "not-applicable";
  }
  return "?";
}

SeparationResult lattice_separation_search(const IntMatrix& m, const IntVector& x, const IntVector& y,
                                           std::optional<std::uint64_t> k_max) {
  require_dimensions(m, x, y);
  require_unimodular(m);
  SeparationResult result;
  const auto decision = lattice_twisted_decide(m, x, y);
  const IntMatrix a = IntMatrix::identity(m.size()) - m;
  if (k_max) {
    result.k_max = *k_max;
  } else {
    const mpz_class det = abs(a.determinant());
    result.k_max = det == 0 ? 64 : (det > kSeparationSearchCap ? kSeparationSearchCap : det.get_ui());
  }
  if (result.k_max > kSeparationSearchCap)
    throw InputError("k-max is limited to " + std::to_string(kSeparationSearchCap));
  if (decision.equivalent) {
    result.status = SeparationResult::Status::not_applicable;
    result.equivalence_witness = decision.witness;
    return result;
  }

  const auto snf = smith_normal_form(a);
  IntVector diff(m.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = y[i] - x[i];
  const IntVector b = snf.U.apply(diff);
  for (std::uint64_t k = 2; k <= result.k_max; ++k) {
    const mpz_class kk = static_cast<unsigned long>(k);
    bool separated = false;
    for (std::size_t i = 0; i < b.size() && !separated; ++i) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), snf.D(i, i).get_mpz_t(), kk.get_mpz_t());
      separated = mod(b[i], g) != 0;
    }
    if (!separated) continue;
    SeparationWitness w;
    w.k = k;
    w.x_image = reduce_vector(x, kk);
    w.y_image = reduce_vector(y, kk);
    w.automorphism_mod_k = reduce_matrix(m, kk);
    if (!verify_separation_witness(m, x, y, w))
      throw VerificationError("separation modulo k=" + std::to_string(k) + " fails re-verification");
    w.orbit_checked = small_power(k, m.size(), kFiniteRecheckCap).has_value();
    result.status = SeparationResult::Status::separated;
    result.witness = std::move(w);
    return result;
  }
  result.status = SeparationResult::Status::not_found;
  return result;
}

bool verify_separation_witness(const IntMatrix& m, const IntVector& x, const IntVector& y,
                               const SeparationWitness& w) {
  require_dimensions(m, x, y);
  if (w.k < 2) return false;
  const mpz_class k = static_cast<unsigned long>(w.k);
  if (w.x_image != reduce_vector(x, k) || w.y_image != reduce_vector(y, k)) return false;
  if (w.automorphism_mod_k != reduce_matrix(m, k)) return false;

  const IntMatrix a = IntMatrix::identity(m.size()) - m;
  IntVector diff(m.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = w.y_image[i] - w.x_image[i];
  const IntVector r = reduce_modulo_lattice(quotient_lattice(a, k), diff);
  if (std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; })) return false;

  if (small_power(w.k, m.size(), kFiniteRecheckCap)) {
    const auto q = finite_quotient(m.size(), w.k);
    const auto phi = quotient_automorphism(q, w.automorphism_mod_k);
    if (twisted_decide_finite(phi, q.encode(w.x_image), q.encode(w.y_image)).equivalent) return false;
  }
  return true;
}

namespace {

// (a): F(M e_i) = φ_K(F(e_i)) for every basis vector.
bool square_commutes(const IntMatrix& m, const IntMatrix& mk, const mpz_class& k) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    IntVector e(m.size(), 0);
    e[i] = 1;
    if (reduce_vector(m.apply(e), k) != reduce_vector(mk.apply(reduce_vector(e, k)), k)) return false;
  }
  return true;
}

// (b): (I − M)X = kI exhibits kZ^n inside (I − M)Z^n.
bool kernel_contained(const IntMatrix& a, const IntMatrix& x, const mpz_class& k) {
  IntMatrix target = IntMatrix::identity(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) target(i, i) = k;
  return a * x == target;
}

// (c): the representatives are pairwise inequivalent modulo (I − M)Z^n + kZ^n,
// i.e. their images lie in distinct φ_K-classes, and there are |det| of them.
bool classes_disjoint(const IntMatrix& a, const std::vector<IntVector>& reps, const mpz_class& k) {
  if (mpz_class(reps.size()) != abs(a.determinant())) return false;
  const IntMatrix h = quotient_lattice(a, k);
  std::set<std::vector<std::string>> seen;
  for (const auto& y : reps) {
    std::vector<std::string> key;
    for (const auto& c : reduce_modulo_lattice(h, y)) key.push_back(c.get_str());
    if (!seen.insert(std::move(key)).second) return false;
  }
  return true;
}

bool orbit_recheck(const IntMatrix& mk, std::uint64_t k, const std::vector<IntVector>& reps) {
  const auto q = finite_quotient(mk.size(), k);
  const auto classes = twisted_classes(quotient_automorphism(q, mk));
  if (classes.class_count() != k) return false;
  std::set<std::size_t> hit;
  for (const auto& y : reps) hit.insert(classes.class_of(q.encode(y)));
  return hit.size() == reps.size();
}

} // namespace

RPResult rp_certificate(const IntMatrix& m) {
  require_unimodular(m);
  const std::size_t n = m.size();
  const IntMatrix a = IntMatrix::identity(n) - m;
  const mpz_class det = a.determinant();
  RPResult result;
  if (det == 0) {
    result.infinite = true;
    return result;
  }
  const mpz_class k = abs(det);
  if (k > kCertificateCap)
    throw InputError("|det(I - M)| = " + k.get_str() + " exceeds the certificate enumeration cap " +
                     std::to_string(kCertificateCap));

  RPCertificate cert;
  cert.k = k.get_ui();
  cert.automorphism_mod_k = reduce_matrix(m, k);
  cert.cofactor = a.adjugate();
  if (det < 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cert.cofactor(i, j) = -cert.cofactor(i, j);

  // Representatives y = U^{-1}c with 0 ≤ c_i < d_i, where U(I − M)V = D.
  const auto snf = smith_normal_form(a);
  IntMatrix u_inv = snf.U.adjugate();
  if (snf.U.determinant() < 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u_inv(i, j) = -u_inv(i, j);
  const auto d = snf.diagonal();
  IntVector c(n, 0);
  for (;;) {
    cert.representatives.push_back(reduce_vector(u_inv.apply(c), k));
    std::size_t i = 0;
    while (i < n) {
      c[i] += 1;
      if (c[i] < d[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == n) break;
  }

  cert.square_commutes = square_commutes(m, cert.automorphism_mod_k, k);
  cert.kernel_contained = kernel_contained(a, cert.cofactor, k);
  cert.classes_disjoint = classes_disjoint(a, cert.representatives, k);
  if (small_power(cert.k, n, kFiniteRecheckCap))
    cert.orbit_checked = orbit_recheck(cert.automorphism_mod_k, cert.k, cert.representatives);
  if (!cert.verified() || (small_power(cert.k, n, kFiniteRecheckCap) && !cert.orbit_checked))
    throw VerificationError("RP certificate for k=" + k.get_str() + " fails its own checks");
  result.certificate = std::move(cert);
  return result;
}

bool verify_rp_certificate(const IntMatrix& m, const RPCertificate& cert) {
  const IntMatrix a = IntMatrix::identity(m.size()) - m;
  const mpz_class k = static_cast<unsigned long>(cert.k);
  if (k == 0 || abs(a.determinant()) != k) return false;
  if (cert.automorphism_mod_k != reduce_matrix(m, k)) return false;
  for (const auto& y : cert.representatives)
    if (y.size() != m.size() || reduce_vector(y, k) != y) return false;
  if (!square_commutes(m, cert.automorphism_mod_k, k)) return false;
  if (!kernel_contained(a, cert.cofactor, k)) return false;
  if (!classes_disjoint(a, cert.representatives, k)) return false;
  if (small_power(cert.k, m.size(), kFiniteRecheckCap) &&
      !orbit_recheck(cert.automorphism_mod_k, cert.k, cert.representatives))
    return false;
  return true;
}

DehnDecision twisted_dehn_decide(const DehnInstance& instance) {
  DehnDecision out;
  if (const auto* f = std::get_if<FiniteInstance>(&instance)) {
    const auto d = twisted_decide_finite(f->phi, f->x, f->y);
    out.equivalent = d.equivalent;
    out.finite_witness = d.witness;
    return out;
  }
  const auto& l = std::get<LatticeInstance>(instance);
  const auto d = lattice_twisted_decide(l.m, l.x, l.y);
  out.equivalent = d.equivalent;
  out.lattice_witness = d.witness;
  if (!d.equivalent && l.want_separation) out.separation = lattice_separation_search(l.m, l.x, l.y);
  return out;
}

} // namespace twisted
