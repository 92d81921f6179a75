#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "twisted/dual.hpp"
#include "twisted/error.hpp"

using namespace twisted;

namespace {

// Elements 2u + s for unit u ∈ {1, i, j, k} and sign s (0 = +).
GroupPtr quaternion_group() {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Element>> rows(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int u = a / 2, v = b / 2;
      rows[a][b] = static_cast<Element>(2 * unit[u][v] + ((a % 2) ^ (b % 2) ^ sign[u][v]));
    }
  return group_from_table(rows);
}

std::vector<GroupPtr> groups() {
  return {cyclic_group(1), cyclic_group(5), cyclic_group(8), dihedral_group(4), dihedral_group(5),
          symmetric_group(3), quaternion_group(), direct_product(cyclic_group(2), cyclic_group(4))};
}

std::uint32_t brute_constant(const oracle::Table& t, const std::vector<std::size_t>& label, std::size_t i,
                             std::size_t j, std::uint32_t z) {
  std::uint32_t c = 0;
  for (std::uint32_t u = 0; u < t.size(); ++u)
    for (std::uint32_t v = 0; v < t.size(); ++v)
      if (label[u] == i && label[v] == j && t[u][v] == z) ++c;
  return c;
}

} // namespace

TEST_CASE("quaternion table is a group with five classes") {
  const auto q = quaternion_group();
  CHECK(q->order() == 8);
  CHECK(oracle::count(oracle::conjugacy_classes(q->table_rows())) == 5);
  CHECK(enumerate_automorphisms(q).size() == 24);
}

TEST_CASE("structure constants agree with brute-force counting") {
  for (const auto& g : groups()) {
    const auto t = g->table_rows();
    const auto label = oracle::conjugacy_classes(t);
    const auto cd = class_data(*g);
    const std::size_t r = cd.class_count();
    REQUIRE(r == oracle::count(label));
    CHECK(cd.conjugacy.class_of == label);
    for (std::size_t k = 0; k < r; ++k) {
      const auto rep = cd.conjugacy.representatives[k];
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          CHECK(cd.structure_constant(i, j, k) == brute_constant(t, label, i, j, rep));
    }
    for (std::size_t j = 0; j < r; ++j)
      CHECK(label[oracle::inverse_of(t, cd.conjugacy.representatives[j])] == cd.inverse_class[j]);
  }
}

TEST_CASE("class data: examples") {
  const auto trivial = class_data(*cyclic_group(1));
  CHECK(trivial.class_count() == 1);
  CHECK(trivial.structure_constant(0, 0, 0) == 1);

  const auto c4 = class_data(*cyclic_group(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(c4.structure_constant(i, j, k) == ((i + j) % 4 == k ? 1u : 0u));

  auto sizes = class_data(*symmetric_group(3)).sizes;
  CHECK(sizes[0] == 1);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

  CHECK_THROWS_AS(class_data(*symmetric_group(6)), InputError);
}

TEST_CASE("admissible primes") {
  CHECK(admissible_prime(*cyclic_group(3)) == 7);
  CHECK(admissible_prime(*cyclic_group(4)) == 5);
  CHECK(admissible_prime(*symmetric_group(3)) == 7);
  CHECK(admissible_prime(*quaternion_group()) == 5);
  CHECK(admissible_prime(*cyclic_group(3), 7) == 13);
  CHECK(is_admissible_prime(*cyclic_group(3), 13));
  CHECK_FALSE(is_admissible_prime(*cyclic_group(3), 11));
  CHECK_FALSE(is_admissible_prime(*cyclic_group(3), 3));
  CHECK_FALSE(is_admissible_prime(*cyclic_group(3), 1));
  CHECK_FALSE(is_admissible_prime(*cyclic_group(2), 9));
  CHECK_THROWS_AS(central_characters(*cyclic_group(3), class_data(*cyclic_group(3)), 11), InputError);
}

TEST_CASE("central characters of C3 modulo 7") {
  const auto g = cyclic_group(3);
  const auto table = central_characters(*g, class_data(*g), 7);
  CHECK(table.prime == 7);
  CHECK(table.rows == std::vector<std::vector<std::uint64_t>>{{1, 1, 1}, {1, 2, 4}, {1, 4, 2}});
}

TEST_CASE("central characters satisfy the class-algebra relations") {
  for (const auto& g : groups()) {
    const auto t = g->table_rows();
    const auto label = oracle::conjugacy_classes(t);
    const auto cd = class_data(*g);
    const auto table = central_characters(*g, cd);
    const std::uint64_t p = table.prime;
    const std::size_t r = cd.class_count();
    REQUIRE(table.rows.size() == r);
    for (const auto& w : table.rows) {
      CHECK(w[0] == 1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          std::uint64_t rhs = 0;
          for (std::size_t k = 0; k < r; ++k)
            rhs = (rhs + brute_constant(t, label, i, j, cd.conjugacy.representatives[k]) * w[k]) % p;
          CHECK(w[i] * w[j] % p == rhs);
        }
    }
    for (std::size_t a = 0; a + 1 < r; ++a) CHECK(table.rows[a] < table.rows[a + 1]);
    const auto again = central_characters(*g, cd);
    CHECK(again.rows == table.rows);
    CHECK(again.seed == table.seed);
  }
}

TEST_CASE("fixed dual points equal the Reidemeister number for every automorphism") {
  for (const auto& g : groups()) {
    const auto ctx = make_dual_context(g);
    const auto t = g->table_rows();
    for (const auto& phi : enumerate_automorphisms(g)) {
      const oracle::Map m(phi.images().begin(), phi.images().end());
      const auto expected = oracle::count(oracle::twisted_classes(t, m));
      CHECK(fixed_dual_count(phi, ctx.classes, ctx.table) == expected);
      const auto report = verify_tbft(phi, ctx);
      CHECK(report.pass);
      CHECK(report.brauer_agrees);
      CHECK(report.reidemeister == expected);
    }
  }
}

TEST_CASE("fixed dual counts do not depend on the prime") {
  for (const auto& g : groups()) {
    const auto p1 = admissible_prime(*g);
    const auto p2 = admissible_prime(*g, p1);
    const auto a = make_dual_context(g, p1), b = make_dual_context(g, p2);
    for (const auto& phi : enumerate_automorphisms(g))
      CHECK(fixed_dual_count(phi, a.classes, a.table) == fixed_dual_count(phi, b.classes, b.table));
  }
}

TEST_CASE("fixed dual counts of powers match R of powers") {
  for (const auto& g : {dihedral_group(5), quaternion_group(), cyclic_group(8)}) {
    const auto ctx = make_dual_context(g);
    for (const auto& phi : enumerate_automorphisms(g)) {
      const std::size_t n = phi.order() + 1;
      const auto rs = reidemeister_numbers_of_powers(phi, n);
      for (std::size_t k = 1; k <= n; ++k)
        CHECK(fixed_dual_count(phi.power(static_cast<long long>(k)), ctx.classes, ctx.table) == rs[k - 1]);
    }
  }
}

TEST_CASE("dual permutation is a permutation fixing the trivial character") {
  const auto g = dihedral_group(4);
  const auto ctx = make_dual_context(g);
  for (const auto& phi : enumerate_automorphisms(g)) {
    const auto sigma = class_permutation(phi, ctx.classes.conjugacy);
    auto perm = dual_permutation(ctx.table, sigma);
    // ω of the trivial character is K_j -> |C_j|
    const std::vector<std::uint64_t> sizes(ctx.classes.sizes.begin(), ctx.classes.sizes.end());
    const std::size_t trivial = static_cast<std::size_t>(
        std::find(ctx.table.rows.begin(), ctx.table.rows.end(), sizes) - ctx.table.rows.begin());
    REQUIRE(trivial < perm.size());
    CHECK(perm[trivial] == trivial);
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < perm.size(); ++i) CHECK(perm[i] == i);
  }
}

TEST_CASE("reports and descriptions") {
  const auto c4 = cyclic_group(4);
  const auto inv = Automorphism::from_images(c4, {0, 3, 2, 1});
  CHECK(describe_automorphism(inv) == "[1] -> [3]");
  const auto rep = verify_tbft(inv);
  CHECK(rep.reidemeister == 2);
  CHECK(rep.fixed_dual_points == 2);
  CHECK(rep.invariant_classes == 2);
  CHECK(rep.prime == 5);
  CHECK(rep.pass);
  CHECK_THROWS_AS(verify_tbft(inv, make_dual_context(cyclic_group(5))), InputError);
  CHECK_THROWS_AS(verify_tbft(Automorphism::identity(symmetric_group(6))), InputError);
}
