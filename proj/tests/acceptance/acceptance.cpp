// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"
#include "support/oracles.hpp"
#include "support/series_oracles.hpp"
#include "twisted/dual.hpp"
#include "twisted/error.hpp"
#include "twisted/lattice.hpp"
#include "twisted/separability.hpp"
#include "twisted/zeta.hpp"

using namespace twisted;

namespace {

constexpr std::size_t kMinTbftPairs = 500;
constexpr std::size_t kSemidirectCap = 2000;
constexpr std::size_t kFiniteCongruenceN = 8;
constexpr std::size_t kLatticeCongruenceN = 12;
constexpr std::size_t kZetaOrder = 30;
constexpr long long kFloerMaxN = 10;
constexpr std::uint64_t kFloerMaxPeriod = 12;
constexpr long long kBoxRadius = 10;
constexpr double kGrowthTarget = 2.6180339887498949;  // (3 + √5)/2
constexpr double kGrowthTolerance = 0.05;
constexpr std::size_t kOracleCrossCheckOrder = 16;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Pair {
  GroupPtr group;
  Automorphism phi;
};

IntMatrix to_matrix(const oracle::IMatrix& a) {
  IntMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = static_cast<long>(a[i][j]);
  return m;
}

IntVector to_vector(const std::vector<long long>& v) {
  IntVector out;
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::vector<GroupPtr> sweep_groups() {
  std::vector<GroupPtr> gs;
  for (std::size_t n = 1; n <= 30; ++n) gs.push_back(cyclic_group(n));
  for (std::size_t n = 3; n <= 12; ++n) gs.push_back(dihedral_group(n));
  gs.push_back(symmetric_group(3));
  gs.push_back(symmetric_group(4));
  gs.push_back(cli::load_group(std::string(TWISTED_DATA_DIR) + "/groups/q8.json"));
  for (std::size_t a = 1; a <= 8; ++a)
    for (std::size_t b = a; b <= 8; ++b) gs.push_back(direct_product(cyclic_group(a), cyclic_group(b)));
  return gs;
}

std::vector<Pair> sweep_pairs() {
  std::vector<Pair> pairs;
  for (const auto& g : sweep_groups())
    for (auto& phi : enumerate_automorphisms(g)) pairs.push_back({g, std::move(phi)});
  return pairs;
}

// 1
void tbft_sweep(const std::vector<Pair>& pairs, Outcome& out) {
  std::size_t checked = 0, cross = 0;
  const FiniteGroup* current = nullptr;
  DualContext ctx;
  for (const auto& [g, phi] : pairs) {
    if (current != g.get()) {
      ctx = make_dual_context(g);
      current = g.get();
    }
    const auto r = verify_tbft(phi, ctx);
    ++checked;
    if (!r.pass || !r.brauer_agrees)
      out.fail(r.group + " " + r.automorphism + ": R=" + std::to_string(r.reidemeister) +
               " S_f=" + std::to_string(r.fixed_dual_points) + " invariant=" + std::to_string(r.invariant_classes));
    if (g->order() <= kOracleCrossCheckOrder) {
      const oracle::Map m(phi.images().begin(), phi.images().end());
      if (oracle::count(oracle::twisted_classes(g->table_rows(), m)) != r.reidemeister)
        out.fail(r.group + " " + r.automorphism + ": R disagrees with orbit oracle");
      ++cross;
    }
  }
  if (checked < kMinTbftPairs) out.fail("only " + std::to_string(checked) + " pairs");
  out.detail << checked << " (G,phi) pairs, " << cross << " cross-checked against orbit enumeration";
}

// 2
void semidirect_sweep(const std::vector<Pair>& pairs, Outcome& out) {
  std::size_t checked = 0, skipped = 0;
  for (const auto& [g, phi] : pairs) {
    const std::size_t m = phi.order();
    if (g->order() * m > kSemidirectCap) {
      ++skipped;
      continue;
    }
    const auto r = verify_semidirect_bijection(phi);
    ++checked;
    if (!r.pass()) out.fail(r.group + " " + r.automorphism + ", m=" + std::to_string(m));
  }
  out.detail << checked << " pairs with |G|*m <= " << kSemidirectCap << " (" << skipped << " above the cap)";
}

// 3
void congruence_sweep(const std::vector<Pair>& pairs, Outcome& out) {
  std::size_t sequences = 0, rows = 0, skipped = 0;
  for (const auto& [g, phi] : pairs) {
    const auto audit =
        congruence_audit(finite_sequence(reidemeister_numbers_of_powers(phi, kFiniteCongruenceN), "group"),
                         kFiniteCongruenceN);
    ++sequences;
    rows += audit.rows.size();
    if (!audit.passed()) out.fail(describe_automorphism(phi) + " on order " + std::to_string(g->order()));
  }
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const auto a = oracle::random_unimodular(n, 5, rng);
    const auto audit =
        congruence_audit(reidemeister_sequence(to_matrix(a), kLatticeCongruenceN), kLatticeCongruenceN);
    ++sequences;
    rows += audit.rows.size();
    skipped += audit.skipped.size();
    if (!audit.passed()) out.fail("matrix " + to_string(to_matrix(a)));
  }
  out.detail << sequences << " sequences, " << rows << " rows, " << skipped << " skipped infinite terms";
}

// 4
void lefschetz_sweep(Outcome& out) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 50; ++t) {
    std::vector<oracle::IMatrix> raw;
    std::vector<IntMatrix> maps;
    for (int k = 0; k <= 2; ++k) {
      const std::size_t n = rng() % 4;
      oracle::IMatrix a(n, std::vector<long long>(n));
      for (auto& row : a)
        for (auto& e : row) e = static_cast<long long>(rng() % 7) - 3;
      raw.push_back(a);
      maps.push_back(n == 0 ? IntMatrix(0) : to_matrix(a));
    }
    const auto z = lefschetz_zeta(maps, kZetaOrder);
    const auto expected = oracle::determinant_product(raw, kZetaOrder);
    const auto expanded = z.form.expand(kZetaOrder);
    for (std::size_t i = 0; i <= kZetaOrder; ++i)
      if (z.series[i] != expected[i] || expanded[i] != expected[i]) {
        out.fail("tuple " + std::to_string(t) + " differs at z^" + std::to_string(i));
        break;
      }
  }
  IntMatrix cat(2);
  cat(0, 0) = 2;
  cat(0, 1) = 1;
  cat(1, 0) = 1;
  cat(1, 1) = 1;
  const auto torus = lefschetz_zeta({IntMatrix::identity(1), cat, IntMatrix::identity(1)}, kZetaOrder);
  if (to_string(torus.form) != "(1-3z+z^2)/(1-z)^2") out.fail("torus form " + to_string(torus.form));
  out.detail << "50 random tuples to order " << kZetaOrder << "; torus " << to_string(torus.form);
}

// 5
void floer_sweep(Outcome& out) {
  std::size_t inputs = 0, expanded = 0;
  for (std::uint64_t m = 1; m <= kFloerMaxPeriod; ++m) {
    const auto ds = divisors(m);
    std::vector<long long> values(ds.size(), 0);
    for (;;) {
      const auto f = periodic_floer_zeta(m, values, kZetaOrder);
      ++inputs;
      // log ∏ (1 − z^d)^{e_d} = Σ_n (z^n / n) Σ_{d | n} (−d e_d)
      for (std::uint64_t n = 1; n <= kZetaOrder; ++n) {
        mpq_class a = 0;
        for (const auto& c : f.form.factors)
          if (n % c.d == 0) a -= c.exponent * static_cast<unsigned long>(c.d);
        const auto pos = std::find(ds.begin(), ds.end(), std::gcd(n, m)) - ds.begin();
        if (a != static_cast<long>(values[static_cast<std::size_t>(pos)])) {
          out.fail("m=" + std::to_string(m) + " log coefficient " + std::to_string(n));
          break;
        }
      }
      if (m <= 6 || inputs % 997 == 0) {
        std::vector<mpq_class> a;
        for (std::uint64_t n = 1; n <= kZetaOrder; ++n) {
          const auto pos = std::find(ds.begin(), ds.end(), std::gcd(n, m)) - ds.begin();
          a.emplace_back(static_cast<long>(values[static_cast<std::size_t>(pos)]));
        }
        const auto reference = oracle::exp_by_recurrence(a, kZetaOrder);
        const auto series = f.form.expand(kZetaOrder);
        for (std::size_t i = 0; i <= kZetaOrder; ++i)
          if (series[i] != reference[i]) {
            out.fail("m=" + std::to_string(m) + " expansion differs at z^" + std::to_string(i));
            break;
          }
        ++expanded;
      }
      std::size_t i = 0;
      while (i < values.size() && ++values[i] > kFloerMaxN) values[i++] = 0;
      if (i == values.size()) break;
    }
  }
  const auto example = periodic_floer_zeta(2, {1, 3}, kZetaOrder);
  if (to_string(example.form) != "(1-z)^(-1)(1-z^2)^(-1)") out.fail("example form " + to_string(example.form));
  out.detail << inputs << " inputs (m <= " << kFloerMaxPeriod << ", N_d <= " << kFloerMaxN << "), " << expanded
             << " fully expanded against the exp recurrence; example " << to_string(example.form);
}

struct LatticeCase {
  oracle::IMatrix a;
  long long det = 0;
  std::vector<long long> x, y;
};

bool box_search(const oracle::IMatrix& a, const std::vector<long long>& diff) {
  const std::size_t n = a.size();
  std::vector<long long> g(n, -kBoxRadius);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      long long s = g[i];
      for (std::size_t j = 0; j < n; ++j) s -= a[i][j] * g[j];
      ok = s == diff[i];
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++g[i] > kBoxRadius) g[i++] = -kBoxRadius;
    if (i == n) return false;
  }
}

// 6; fills `inequivalent` for criterion 7.
void lattice_oracles(Outcome& out, std::vector<LatticeCase>& inequivalent, std::vector<oracle::IMatrix>& matrices) {
  std::mt19937_64 rng(66);
  while (matrices.size() < 200) {
    const std::size_t n = 1 + matrices.size() % 4;
    auto a = oracle::random_unimodular(n, 4, rng);
    const auto im = oracle::sub(oracle::identity(n), a);
    if (oracle::det(im) == 0) continue;
    const auto r = lattice_reidemeister(to_matrix(a));
    if (r.value() != static_cast<long>(oracle::coset_count(im))) out.fail("R mismatch for " + to_string(to_matrix(a)));
    matrices.push_back(std::move(a));
  }
  std::size_t solvable = 0, random_pairs = 0, agree = 0;
  for (std::size_t t = 0; solvable < 100 || random_pairs < 100; ++t) {
    const auto& a = matrices[t % matrices.size()];
    const std::size_t n = a.size();
    if (n > 3) continue;  // box search stays below 21^3 points
    const auto im = oracle::sub(oracle::identity(n), a);
    std::vector<long long> x(n), y(n), diff(n);
    const bool make_solvable = solvable < 100 && t % 2 == 0;
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<long long>(rng() % 21) - 10;
    if (make_solvable) {
      std::vector<long long> g(n);
      for (auto& e : g) e = static_cast<long long>(rng() % (2 * kBoxRadius + 1)) - kBoxRadius;
      for (std::size_t i = 0; i < n; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += im[i][j] * g[j];
        y[i] = x[i] + s;
      }
    } else {
      if (random_pairs >= 100) continue;
      for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<long long>(rng() % 21) - 10;
    }
    for (std::size_t i = 0; i < n; ++i) diff[i] = y[i] - x[i];
    const IntMatrix m = to_matrix(a);
    const auto d = lattice_twisted_decide(m, to_vector(x), to_vector(y));
    const bool found = box_search(a, diff);
    bool ok = true;
    if (found && !d.equivalent) ok = false;
    if (d.equivalent && (IntMatrix::identity(n) - m).apply(*d.witness) != to_vector(diff)) ok = false;
    if (!make_solvable && !d.equivalent && found) ok = false;
    if (!ok) out.fail("decision disagrees for " + to_string(m));
    agree += ok;
    if (make_solvable)
      ++solvable;
    else
      ++random_pairs;
    if (!d.equivalent) inequivalent.push_back({a, std::llabs(oracle::det(im)), x, y});
  }
  out.detail << matrices.size() << " matrices against the coset oracle; " << solvable << " solvable and "
             << random_pairs << " random decisions against box search |g| <= " << kBoxRadius << " (" << agree
             << " agree)";
}

// 7
void separability_checks(const std::vector<LatticeCase>& cases, const std::vector<oracle::IMatrix>& matrices,
                         Outcome& out) {
  std::size_t separated = 0, certificates = 0, orbit = 0;
  for (const auto& c : cases) {
    const IntMatrix m = to_matrix(c.a);
    const auto s = lattice_separation_search(m, to_vector(c.x), to_vector(c.y));
    if (s.status != SeparationResult::Status::separated || static_cast<long long>(s.witness->k) > c.det ||
        !verify_separation_witness(m, to_vector(c.x), to_vector(c.y), *s.witness)) {
      out.fail("no separation for " + to_string(m));
      continue;
    }
    ++separated;
  }
  for (const auto& a : matrices) {
    const IntMatrix m = to_matrix(a);
    const auto r = rp_certificate(m);
    if (!r.certificate || !r.certificate->verified() || !verify_rp_certificate(m, *r.certificate) ||
        static_cast<long long>(r.certificate->representatives.size()) !=
            oracle::coset_count(oracle::sub(oracle::identity(a.size()), a))) {
      out.fail("RP certificate for " + to_string(m));
      continue;
    }
    ++certificates;
    orbit += r.certificate->orbit_checked;
  }
  if (cases.empty()) out.fail("no inequivalent pairs");
  out.detail << separated << "/" << cases.size() << " inequivalent pairs separated with k <= |det(I-M)|; "
             << certificates << "/" << matrices.size() << " RP certificates verified (" << orbit
             << " also by orbit count)";
}

// 8
void growth_checks(const std::vector<Pair>& pairs, Outcome& out) {
  IntMatrix cat(2);
  cat(0, 0) = 2;
  cat(0, 1) = 1;
  cat(1, 0) = 1;
  cat(1, 1) = 1;
  std::vector<mpz_class> r;
  for (const auto& t : reidemeister_sequence(cat, 30).terms) r.push_back(t.value());
  const double est = growth_rate(r).estimate;
  if (std::abs(est - kGrowthTarget) > kGrowthTolerance) out.fail("cat map estimate " + std::to_string(est));

  std::size_t periodic = 0;
  std::mt19937_64 rng(88);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t m = 1 + rng() % kFloerMaxPeriod;
    std::vector<long long> per_divisor;
    for (std::size_t i = 0; i < divisors(m).size(); ++i) per_divisor.push_back(static_cast<long long>(rng() % 11));
    const auto ds = divisors(m);
    std::vector<mpz_class> seq;
    for (std::uint64_t n = 1; n <= 30; ++n)
      seq.emplace_back(static_cast<long>(
          per_divisor[static_cast<std::size_t>(std::find(ds.begin(), ds.end(), std::gcd(n, m)) - ds.begin())]));
    if (growth_rate(seq).estimate != 1.0) out.fail("periodic sequence with m=" + std::to_string(m));
    ++periodic;
  }
  for (std::size_t i = 0; i < pairs.size(); i += 7) {
    // two full periods, so each envelope window sees the whole cycle
    const auto counts = reidemeister_numbers_of_powers(pairs[i].phi, std::max<std::size_t>(30, 2 * pairs[i].phi.order()));
    std::vector<mpz_class> seq(counts.begin(), counts.end());
    if (growth_rate(seq).estimate != 1.0) out.fail("R(phi^n) of " + describe_automorphism(pairs[i].phi));
    ++periodic;
  }
  out.detail << "cat map estimate " << est << " (target " << kGrowthTarget << " +/- " << kGrowthTolerance << "); "
             << periodic << " periodic sequences at exactly 1.0";
}

bool report(int number, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "criterion " << number << " [" << name << "]: " << (out.pass ? "PASS" : "FAIL") << " - "
            << out.detail.str();
  std::cout.precision(1);
  std::cout << std::fixed << " (" << secs << "s)" << std::defaultfloat << std::endl;
  std::cout.precision(6);
  for (const auto& f : out.failures) std::cout << "    " << f << "\n";
  return out.pass;
}

} // namespace

int main() {
  const auto pairs = sweep_pairs();
  std::vector<LatticeCase> inequivalent;
  std::vector<oracle::IMatrix> matrices;
  bool all = true;
  all &= report(1, "twisted Burnside-Frobenius sweep", [&](Outcome& o) { tbft_sweep(pairs, o); });
  all &= report(2, "semidirect class bijection", [&](Outcome& o) { semidirect_sweep(pairs, o); });
  all &= report(3, "Gauss congruences", [&](Outcome& o) { congruence_sweep(pairs, o); });
  all &= report(4, "Lefschetz zeta rationality", lefschetz_sweep);
  all &= report(5, "periodic zeta product form", floer_sweep);
  all &= report(6, "lattice oracle equivalence", [&](Outcome& o) { lattice_oracles(o, inequivalent, matrices); });
  all &= report(7, "separability and RP certificates",
                [&](Outcome& o) { separability_checks(inequivalent, matrices, o); });
  all &= report(8, "growth rate", [&](Outcome& o) { growth_checks(pairs, o); });
  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
