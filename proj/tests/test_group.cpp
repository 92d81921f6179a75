#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "twisted/automorphism.hpp"
#include "twisted/classes.hpp"
#include "twisted/error.hpp"
#include "twisted/group.hpp"

using namespace twisted;

namespace {

std::vector<GroupPtr> small_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(4), cyclic_group(6), dihedral_group(3),
          dihedral_group(4), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(2)),
          direct_product(cyclic_group(2), cyclic_group(4))};
}

oracle::Map images_of(const Automorphism& phi) { return {phi.images().begin(), phi.images().end()}; }

} // namespace

TEST_CASE("builders: basic groups") {
  auto c1 = cyclic_group(1);
  CHECK(c1->order() == 1);
  CHECK(c1->table_rows() == std::vector<std::vector<Element>>{{0}});

  auto c6 = cyclic_group(6);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) CHECK(c6->mul(a, b) == (a + b) % 6);

  auto s3 = symmetric_group(3);
  CHECK(s3->order() == 6);
  CHECK(oracle::count(oracle::conjugacy_classes(s3->table_rows())) == 3);
  CHECK(conjugacy_classes(*s3).class_count() == 3);

  CHECK(symmetric_group(4)->order() == 24);
  CHECK(dihedral_group(5)->order() == 10);
  CHECK(symmetric_group(6)->order() == 720);
  CHECK_THROWS_AS(symmetric_group(7), InputError);
  CHECK_THROWS_AS(dihedral_group(2), InputError);
  CHECK_THROWS_AS(cyclic_group(0), InputError);
}

TEST_CASE("builders: tables are validated") {
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 3, 1, 2}}),
                       "row 3 is not a permutation", InputError);
  // Latin square with identity 0 but not associative (order 5 loop).
  std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(group_from_table(loop), InputError);
  CHECK_THROWS_AS(group_from_table({{1, 0}, {0, 1}}), InputError);
  auto z2 = group_from_table({{0, 1}, {1, 0}}, {"e", "a"});
  CHECK(z2->element_name(1) == "a");
}

TEST_CASE("builders: permutation closure and products") {
  auto d4 = permutation_group(4, {{1, 2, 3, 0}, {2, 1, 0, 3}});
  CHECK(d4->order() == 8);
  CHECK(d4->identity() == 0);
  CHECK(d4->element_name(0) == "()");
  CHECK(oracle::isomorphic(d4->table_rows(), dihedral_group(4)->table_rows()));
  CHECK_THROWS_AS(permutation_group(17, {}), InputError);

  auto p = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(p->order() == 6);
  CHECK(oracle::isomorphic(p->table_rows(), cyclic_group(6)->table_rows()));
  CHECK(p->mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
}

TEST_CASE("group invariants hold for every builder") {
  for (const auto& g : small_groups()) {
    const auto t = g->table_rows();
    CHECK(oracle::identity_of(t) == 0);
    for (Element a = 0; a < g->order(); ++a) {
      CHECK(g->mul(a, g->inv(a)) == 0);
      std::set<Element> row(t[a].begin(), t[a].end());
      CHECK(row.size() == g->order());
    }
    CHECK(generated_subgroup(*g, g->generators()) == std::vector<bool>(g->order(), true));
  }
}

TEST_CASE("automorphisms from generator images") {
  auto c3 = cyclic_group(3);
  std::vector<Element> gen{1}, img{2};
  auto inv = Automorphism::from_generator_images(c3, gen, img);
  CHECK(inv(1) == 2);
  CHECK(inv(2) == 1);

  auto s3 = symmetric_group(3);
  for (Element h = 0; h < 6; ++h) {
    auto c = Automorphism::inner(s3, h);
    for (Element x = 0; x < 6; ++x) CHECK(c(x) == s3->mul(s3->mul(h, x), s3->inv(h)));
  }

  auto c4 = cyclic_group(4);
  std::vector<Element> dbl{2};
  CHECK_THROWS_AS(Automorphism::from_generator_images(c4, gen, dbl), InputError);

  auto c2c2 = direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<Element> one{1}, to{2};
  CHECK_THROWS_AS(Automorphism::from_generator_images(c2c2, one, to), InputError);
}

TEST_CASE("automorphism algebra") {
  auto d4 = dihedral_group(4);
  const auto auts = enumerate_automorphisms(d4);
  CHECK(auts.size() == 8);
  for (const auto& a : auts) {
    CHECK(a.compose(a.inverse()).is_identity());
    CHECK(a.power(static_cast<long long>(a.order())).is_identity());
    CHECK(a.power(-1) == a.inverse());
    CHECK(a.power(3) == a.compose(a).compose(a));
  }
}

TEST_CASE("enumerate_automorphisms agrees with brute force over bijections") {
  CHECK(enumerate_automorphisms(cyclic_group(3)).size() == 2);
  CHECK(enumerate_automorphisms(cyclic_group(1)).size() == 1);
  const auto s3auts = enumerate_automorphisms(symmetric_group(3));
  CHECK(s3auts.size() == 6);
  for (const auto& a : s3auts) {
    bool inner = false;
    for (Element h = 0; h < 6; ++h) inner = inner || Automorphism::inner(a.group_ptr(), h) == a;
    CHECK(inner);
  }
  for (const auto& g : small_groups()) {
    auto brute = oracle::automorphisms(g->table_rows());
    std::vector<oracle::Map> mine;
    for (const auto& a : enumerate_automorphisms(g)) mine.push_back(images_of(a));
    std::sort(brute.begin(), brute.end());
    CHECK(mine == brute);
  }
  CHECK_THROWS_AS(enumerate_automorphisms(cyclic_group(257)), InputError);
}

TEST_CASE("twisted classes: examples") {
  auto c3 = cyclic_group(3);
  std::vector<Element> gen{1}, img{2};
  auto inv3 = Automorphism::from_generator_images(c3, gen, img);
  CHECK(reidemeister_number(inv3) == 1);

  auto c4 = cyclic_group(4);
  std::vector<Element> img4{3};
  auto inv4 = Automorphism::from_generator_images(c4, gen, img4);
  auto tc = twisted_classes(inv4);
  CHECK(tc.class_count() == 2);
  CHECK(tc.partition.classes() == std::vector<std::vector<Element>>{{0, 2}, {1, 3}});

  CHECK(reidemeister_number(Automorphism::identity(symmetric_group(3))) == 3);

  auto d = twisted_decide_finite(inv4, 0, 1);
  CHECK_FALSE(d.equivalent);
  d = twisted_decide_finite(inv4, 0, 2);
  CHECK(d.equivalent);
  CHECK(*d.witness == 1);
  d = twisted_decide_finite(inv4, 3, 3);
  CHECK(*d.witness == 0);
  CHECK_THROWS_AS(twisted_decide_finite(inv4, 0, 9), InputError);
}

TEST_CASE("twisted classes match the orbit oracle") {
  for (const auto& g : small_groups())
    for (const auto& phi : enumerate_automorphisms(g)) {
      const auto expected = oracle::twisted_classes(g->table_rows(), images_of(phi));
      CHECK(twisted_classes(phi).partition.class_of == expected);
    }
}

TEST_CASE("identity twist gives ordinary conjugacy") {
  for (const auto& g : small_groups()) {
    CHECK(twisted_classes(Automorphism::identity(g)).partition == conjugacy_classes(*g));
    CHECK(conjugacy_classes(*g).class_of == oracle::conjugacy_classes(g->table_rows()));
  }
  auto s4 = symmetric_group(4);
  CHECK(twisted_classes(Automorphism::identity(s4)).partition == conjugacy_classes(*s4));
}

TEST_CASE("inner twist: x -> x h^{-1} carries phi-classes onto (c_h o phi)-classes") {
  for (const auto& g : {symmetric_group(3), dihedral_group(4), symmetric_group(4), dihedral_group(6),
                        direct_product(symmetric_group(3), cyclic_group(2))}) {
    REQUIRE(g->order() <= 48);
    for (const auto& phi : enumerate_automorphisms(g)) {
      const auto base = twisted_classes(phi).partition;
      for (Element h = 0; h < g->order(); ++h) {
        const auto twisted = Automorphism::inner(g, h).compose(phi);
        const auto other = twisted_classes(twisted).partition;
        CHECK(other.class_count() == base.class_count());
        for (Element x = 0; x < g->order(); ++x)
          for (Element y = x; y < g->order(); ++y) {
            const bool same = base.class_of[x] == base.class_of[y];
            const Element xs = g->mul(x, g->inv(h)), ys = g->mul(y, g->inv(h));
            if (same != (other.class_of[xs] == other.class_of[ys])) FAIL("inner twist bijection broken");
          }
      }
    }
  }
}

TEST_CASE("naturality: R(psi phi psi^{-1}) = R(phi)") {
  for (const auto& g : {dihedral_group(4), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(4))}) {
    const auto auts = enumerate_automorphisms(g);
    for (const auto& phi : auts) {
      const auto base = twisted_classes(phi).partition;
      for (const auto& psi : auts) {
        const auto conj = psi.compose(phi).compose(psi.inverse());
        const auto other = twisted_classes(conj).partition;
        CHECK(other.class_count() == base.class_count());
        for (Element x = 0; x < g->order(); ++x)
          CHECK(other.class_of[psi(x)] == other.class_of[psi(base.representatives[base.class_of[x]])]);
      }
    }
  }
}

TEST_CASE("processing order does not change the partition") {
  for (const auto& g : small_groups())
    for (const auto& phi : enumerate_automorphisms(g))
      CHECK(twisted_classes(phi, ProcessingOrder::ascending).partition ==
            twisted_classes(phi, ProcessingOrder::descending).partition);
}

TEST_CASE("every witness satisfies its equation") {
  auto g = dihedral_group(5);
  for (const auto& phi : enumerate_automorphisms(g)) {
    const auto tc = twisted_classes(phi);
    for (Element x = 0; x < g->order(); ++x)
      for (Element y = 0; y < g->order(); ++y) {
        const auto d = twisted_decide_finite(tc, x, y);
        CHECK(d.equivalent == (tc.class_of(x) == tc.class_of(y)));
        if (d.witness) CHECK(g->mul(g->mul(*d.witness, x), g->inv(phi(*d.witness))) == y);
      }
  }
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic_group(3);
  std::vector<Element> gen{1}, img{2};
  auto inv3 = Automorphism::from_generator_images(c3, gen, img);
  auto g6 = semidirect_with_cyclic(inv3, 2);
  CHECK(g6->order() == 6);
  bool abelian = true;
  std::size_t involutions = 0;
  for (Element a = 0; a < 6; ++a) {
    if (g6->element_order(a) == 2) ++involutions;
    for (Element b = 0; b < 6; ++b) abelian = abelian && g6->mul(a, b) == g6->mul(b, a);
  }
  CHECK_FALSE(abelian);
  CHECK(involutions == 3);

  auto c4 = cyclic_group(4);
  std::vector<Element> img4{3};
  auto inv4 = Automorphism::from_generator_images(c4, gen, img4);
  CHECK(oracle::isomorphic(semidirect_with_cyclic(inv4, 2)->table_rows(), dihedral_group(4)->table_rows()));

  auto s3 = symmetric_group(3);
  CHECK(semidirect_with_cyclic(Automorphism::identity(s3), 1)->same_table(*s3));

  CHECK_THROWS_AS(semidirect_with_cyclic(inv4, 3), InputError);
  CHECK_THROWS_AS(semidirect_with_cyclic(Automorphism::identity(symmetric_group(6)), 30), InputError);
}

TEST_CASE("invariant class count") {
  auto c4 = cyclic_group(4);
  std::vector<Element> gen{1}, img{3};
  CHECK(invariant_class_count(Automorphism::from_generator_images(c4, gen, img)) == 2);
  auto s3 = symmetric_group(3);
  CHECK(invariant_class_count(Automorphism::identity(s3)) == 3);
  for (Element h = 0; h < 6; ++h) CHECK(invariant_class_count(Automorphism::inner(s3, h)) == 3);
}
