#include "twisted/dual.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "twisted/error.hpp"

namespace twisted {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Arithmetic in F_p for p < 10^6, so products fit in 64 bits.
struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Row-reduces in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Mat& m, const Field& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const u64 inv = f.inv(m[row][c]);
    for (auto& e : m[row]) e = f.mul(e, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const u64 factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {x : a x = 0} for a square matrix a.
Mat nullspace(Mat a, const Field& f) {
  const std::size_t n = a.size();
  auto pivots = rref(a, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.sub(0, a[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Characteristic polynomial via reduction to Hessenberg form; low to high.
Vec charpoly(Mat h, const Field& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 t = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      const u64 u = f.mul(h[i][m - 1], t);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<Vec> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec pm(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 diag = h[m - 1][m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pm[d + 1] = f.add(pm[d + 1], prev[d]);
      pm[d] = f.sub(pm[d], f.mul(diag, prev[d]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 coeff = f.mul(t, h[m - i - 1][m - 1]);
      const auto& q = polys[m - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) pm[d] = f.sub(pm[d], f.mul(coeff, q[d]));
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

u64 evaluate(const Vec& poly, u64 x, const Field& f) {
  u64 acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

Vec apply(const Mat& a, const Vec& v, const Field& f) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) acc = (acc + a[i][j] * v[j]) % f.p;
    out[i] = acc;
  }
  return out;
}

// A joint eigenspace, stored as row vectors in reduced echelon form.
struct Space {
  Mat basis;
  std::vector<std::size_t> pivots;
};

Space make_space(Mat vectors, const Field& f) {
  Space s;
  s.pivots = rref(vectors, f);
  s.basis = std::move(vectors);
  return s;
}

// Splits `space` into the eigenspaces of `a` restricted to it.
std::vector<Space> split(const Space& space, const Mat& a, const Field& f) {
  const std::size_t k = space.basis.size();
  Mat c(k, Vec(k, 0));
  for (std::size_t l = 0; l < k; ++l) {
    Vec w = apply(a, space.basis[l], f);
    for (std::size_t j = 0; j < k; ++j) c[j][l] = w[space.pivots[j]];
  }
  const Vec poly = charpoly(c, f);
  std::vector<u64> roots;
  for (u64 lambda = 0; lambda < f.p; ++lambda)
    if (evaluate(poly, lambda, f) == 0) roots.push_back(lambda);

  std::vector<Space> pieces;
  std::size_t total = 0;
  for (u64 lambda : roots) {
    Mat shifted = c;
    for (std::size_t i = 0; i < k; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    Mat kernel = nullspace(std::move(shifted), f);
    Mat vectors;
    for (const auto& coeffs : kernel) {
      Vec v(space.basis[0].size(), 0);
      for (std::size_t j = 0; j < k; ++j)
        if (coeffs[j])
          for (std::size_t t = 0; t < v.size(); ++t)
            v[t] = f.add(v[t], f.mul(coeffs[j], space.basis[j][t]));
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    pieces.push_back(make_space(std::move(vectors), f));
  }
  if (total != k)
    throw VerificationError("class-algebra element is not diagonalizable over F_" +
                            std::to_string(f.p) + " (eigenspaces cover " + std::to_string(total) +
                            " of " + std::to_string(k) + " dimensions)");
  return pieces;
}

Mat class_matrix(const ClassData& cd, std::size_t i, const Field& f) {
  const std::size_t r = cd.class_count();
  Mat m(r, Vec(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) m[j][k] = cd.structure_constant(i, j, k) % f.p;
  return m;
}

bool all_lines(const std::vector<Space>& spaces) {
  return std::all_of(spaces.begin(), spaces.end(),
                     [](const Space& s) { return s.basis.size() == 1; });
}

std::vector<Space> split_all(const std::vector<Space>& spaces, const Mat& a, const Field& f) {
  std::vector<Space> next;
  for (const auto& s : spaces) {
    if (s.basis.size() == 1) {
      next.push_back(s);
      continue;
    }
    for (auto& piece : split(s, a, f)) next.push_back(std::move(piece));
  }
  return next;
}

constexpr int kRandomRounds = 2;

} // namespace

ClassData class_data(const FiniteGroup& g) {
  if (g.order() > kDualOrderCap)
    throw InputError("class algebra computations are limited to order <= " +
                     std::to_string(kDualOrderCap));
  ClassData cd;
  cd.conjugacy = conjugacy_classes(g);
  const std::size_t r = cd.conjugacy.class_count();
  cd.sizes.assign(r, 0);
  for (auto c : cd.conjugacy.class_of) ++cd.sizes[c];
  cd.inverse_class.resize(r);
  for (std::size_t j = 0; j < r; ++j)
    cd.inverse_class[j] = cd.conjugacy.class_of[g.inv(cd.conjugacy.representatives[j])];

  auto count_for = [&](std::size_t k, Element z, std::vector<std::uint32_t>& out) {
    // out[i*r + j] = #{u ∈ C_i : u^{-1} z ∈ C_j}
    std::fill(out.begin(), out.end(), 0);
    for (Element u = 0; u < g.order(); ++u) {
      const std::size_t i = cd.conjugacy.class_of[u];
      const std::size_t j = cd.conjugacy.class_of[g.mul(g.inv(u), z)];
      ++out[i * r + j];
    }
    (void)k;
  };

  cd.constants.assign(r * r * r, 0);
  std::vector<std::uint32_t> column(r * r), check(r * r);
  const auto members = cd.conjugacy.classes();
  for (std::size_t k = 0; k < r; ++k) {
    count_for(k, cd.conjugacy.representatives[k], column);
    for (std::size_t ij = 0; ij < r * r; ++ij) cd.constants[ij * r + k] = column[ij];
    if (members[k].size() > 1) {
      count_for(k, members[k].back(), check);
      if (check != column)
        throw VerificationError("structure constants depend on the class representative (class " +
                                std::to_string(k) + ")");
    }
  }

  // Class matrices commute; checked on all pairs for small r, adjacent pairs otherwise.
  auto commute = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        std::uint64_t ab = 0, ba = 0;
        for (std::size_t t = 0; t < r; ++t) {
          ab += std::uint64_t{cd.structure_constant(a, j, t)} * cd.structure_constant(b, t, k);
          ba += std::uint64_t{cd.structure_constant(b, j, t)} * cd.structure_constant(a, t, k);
        }
        if (ab != ba) return false;
      }
    return true;
  };
  for (std::size_t a = 1; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      if (r > 12 && (b != a + 1 || a > 8)) continue;
      if (!commute(a, b))
        throw VerificationError("class matrices " + std::to_string(a) + " and " + std::to_string(b) +
                                " do not commute");
    }
  return cd;
}

bool is_admissible_prime(const FiniteGroup& g, std::uint64_t p) {
  return p < kPrimeSearchLimit && is_prime(p) && p % g.exponent() == 1 % g.exponent() &&
         g.order() % p != 0;
}

std::uint64_t admissible_prime(const FiniteGroup& g, std::uint64_t after) {
  const std::uint64_t e = g.exponent();
  for (std::uint64_t p = (after / e + 1) * e + 1; p < kPrimeSearchLimit; p += e)
    if (p > after && is_admissible_prime(g, p)) return p;
  throw InputError("no admissible prime below " + std::to_string(kPrimeSearchLimit) +
                   " for exponent " + std::to_string(e));
}

CentralCharacterTable central_characters(const FiniteGroup& g, const ClassData& cd,
                                         std::optional<std::uint64_t> prime) {
  const std::size_t r = cd.class_count();
  if (cd.conjugacy.class_of.size() != g.order()) throw InputError("class data does not match group");
  CentralCharacterTable table;
  table.prime = prime ? *prime : admissible_prime(g);
  if (!is_admissible_prime(g, table.prime))
    throw InputError("prime " + std::to_string(table.prime) + " is not admissible for " +
                     g.description() + " (need p prime, p = 1 mod " + std::to_string(g.exponent()) +
                     ", p not dividing the order)");
  table.seed = g.table_hash();
  table.group_hash = g.table_hash();
  const Field f{table.prime};

  Mat id(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  std::vector<Space> spaces{make_space(id, f)};

  std::vector<Mat> matrices;
  matrices.reserve(r);
  for (std::size_t i = 0; i < r; ++i) matrices.push_back(class_matrix(cd, i, f));

  std::mt19937_64 rng(table.seed);
  for (int round = 0; round < kRandomRounds && !all_lines(spaces); ++round) {
    Mat combo(r, Vec(r, 0));
    for (std::size_t i = 1; i < r; ++i) {
      const u64 c = rng() % f.p;
      if (c == 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          if (matrices[i][j][k]) combo[j][k] = f.add(combo[j][k], f.mul(c, matrices[i][j][k]));
    }
    spaces = split_all(spaces, combo, f);
  }
  for (std::size_t i = 1; i < r && !all_lines(spaces); ++i) spaces = split_all(spaces, matrices[i], f);

  if (!all_lines(spaces)) {
    std::string dims;
    for (const auto& s : spaces) dims += (dims.empty() ? "" : ",") + std::to_string(s.basis.size());
    throw VerificationError("joint eigenspace splitting stalled over F_" + std::to_string(f.p) +
                            "; dimensions: " + dims);
  }
  if (spaces.size() != r)
    throw VerificationError("found " + std::to_string(spaces.size()) + " central characters, expected " +
                            std::to_string(r));

  for (auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0) throw VerificationError("central character vanishes on the identity class");
    const u64 scale = f.inv(w[0]);
    for (auto& e : w) e = f.mul(e, scale);
    table.rows.push_back(std::move(w));
  }
  std::sort(table.rows.begin(), table.rows.end());
  if (std::adjacent_find(table.rows.begin(), table.rows.end()) != table.rows.end())
    throw VerificationError("central characters are not pairwise distinct");

  // ω(K_i) ω(K_j) = Σ_k a[i][j][k] ω(K_k); every i for small r, a sample otherwise.
  for (const auto& w : table.rows)
    for (std::size_t i = 0; i < r; ++i) {
      if (r > 64 && i > 4) break;
      const Vec mw = apply(matrices[i], w, f);
      for (std::size_t j = 0; j < r; ++j)
        if (mw[j] != f.mul(w[i], w[j]))
          throw VerificationError("central character row is not an eigenvector of class matrix " +
                                  std::to_string(i));
    }
  return table;
}

std::vector<std::size_t> dual_permutation(const CentralCharacterTable& table,
                                          const std::vector<std::size_t>& sigma) {
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < table.rows.size(); ++i) index.emplace(table.rows[i], i);
  std::vector<std::size_t> pi(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& w = table.rows[i];
    if (w.size() != sigma.size()) throw InputError("class permutation does not match table");
    Vec pulled(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) pulled[j] = w[sigma[j]];
    auto it = index.find(pulled);
    if (it == index.end())
      throw VerificationError("pullback of a central character is not a central character");
    pi[i] = it->second;
  }
  return pi;
}

std::size_t fixed_dual_count(const Automorphism& phi, const ClassData& cd,
                             const CentralCharacterTable& table) {
  if (table.group_hash != phi.group().table_hash() || table.rows.empty() ||
      table.rows.front().size() != cd.class_count() ||
      cd.conjugacy.class_of.size() != phi.group().order())
    throw InputError("central character table does not belong to this group");
  const auto sigma = class_permutation(phi, cd.conjugacy);
  std::size_t fixed = 0;
  for (const auto& w : table.rows) {
    bool invariant = true;
    for (std::size_t j = 0; j < sigma.size() && invariant; ++j) invariant = w[j] == w[sigma[j]];
    if (invariant) ++fixed;
  }
  return fixed;
}

DualContext make_dual_context(const GroupPtr& group, std::optional<std::uint64_t> prime) {
  if (!group) throw InputError("dual context needs a group");
  DualContext ctx{group, class_data(*group), {}};
  ctx.table = central_characters(*group, ctx.classes, prime);
  return ctx;
}

std::string describe_automorphism(const Automorphism& phi) {
  std::string lhs = "[", rhs = "[";
  bool first = true;
  for (Element s : phi.group().generators()) {
    if (!first) {
      lhs += ',';
      rhs += ',';
    }
    lhs += std::to_string(s);
    rhs += std::to_string(phi(s));
    first = false;
  }
  return lhs + "] -> " + rhs + "]";
}

TBFTReport verify_tbft(const Automorphism& phi, const DualContext& context) {
  if (!context.group || !context.group->same_table(phi.group()))
    throw InputError("dual context belongs to a different group");
  TBFTReport report;
  report.group = phi.group().description();
  report.automorphism = describe_automorphism(phi);
  report.reidemeister = reidemeister_number(phi);
  report.fixed_dual_points = fixed_dual_count(phi, context.classes, context.table);
  report.invariant_classes = invariant_class_count(phi, context.classes.conjugacy);
  report.prime = context.table.prime;
  report.seed = context.table.seed;
  report.pass = report.reidemeister == report.fixed_dual_points;
  report.brauer_agrees = report.invariant_classes == report.reidemeister &&
                         report.invariant_classes == report.fixed_dual_points;
  return report;
}

TBFTReport verify_tbft(const Automorphism& phi, std::optional<std::uint64_t> prime) {
  if (phi.group().order() > kDualOrderCap)
    throw InputError("twisted Burnside-Frobenius check is limited to order <= " +
                     std::to_string(kDualOrderCap));
  return verify_tbft(phi, make_dual_context(phi.group_ptr(), prime));
}

} // namespace twisted
