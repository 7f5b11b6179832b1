#include "pants/group.hpp"

#include <set>

#include "doctest.h"
#include "pants/errors.hpp"

using namespace pants;
using Index = FiniteGroup::Index;

namespace {

int element_order(const FiniteGroup& G, Index x) {
  Index cur = x;
  int n = 1;
  while (!G.is_identity(cur)) {
    cur = G.mul(cur, x);
    ++n;
    REQUIRE(n <= G.order());
  }
  return n;
}

Index named(const FiniteGroup& G, const std::string& s) {
  auto i = G.index_of_name(s);
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("dihedral D3 structure") {
  auto G = FiniteGroup::make(GroupKind::Dihedral, 3);
  CHECK(G.order() == 6);
  CHECK(G.name() == "D3");
  CHECK(G.cyclotomic_order() == 120);
  CHECK(G.sign_quotient());

  Index r = named(G, "r"), s = named(G, "s");
  CHECK(element_order(G, r) == 3);
  CHECK(element_order(G, s) == 2);
  // s r s^-1 = r^-1.
  CHECK(G.conjugate(s, r) == G.inv(r));
  // [r, s] = r s r^-1 s^-1 = r^2.
  CHECK(G.commutator(r, s) == G.power(r, 2));
  CHECK(G.power(r, -1) == G.inv(r));
  CHECK(G.power(r, 3) == G.identity());

  // Full associativity of the multiplication table.
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        CHECK(G.mul(G.mul((Index)a, (Index)b), (Index)c) ==
              G.mul((Index)a, G.mul((Index)b, (Index)c)));

  // Names biject with elements.
  std::set<std::string> names;
  for (int i = 0; i < 6; ++i) names.insert(G.element_name((Index)i));
  CHECK(names == std::set<std::string>{"e", "r", "r^2", "s", "r*s", "r^2*s"});
  for (int i = 0; i < 6; ++i) CHECK(named(G, G.element_name((Index)i)) == (Index)i);
}

TEST_CASE("dihedral parameter range") {
  CHECK(FiniteGroup::make(GroupKind::Dihedral, 4).order() == 8);
  CHECK(FiniteGroup::make(GroupKind::Dihedral, 5).order() == 10);
  CHECK(FiniteGroup::make(GroupKind::Dihedral, 6).order() == 12);
  CHECK(FiniteGroup::make(GroupKind::Dihedral, 8).order() == 16);
  CHECK(FiniteGroup::make(GroupKind::Dihedral, 8).cyclotomic_order() == 480);
  CHECK(FiniteGroup::make(GroupKind::Dihedral, 9).order() == 18);
  CHECK_THROWS_AS(FiniteGroup::make(GroupKind::Dihedral, 2), InputError);
  CHECK_THROWS_AS(FiniteGroup::make(GroupKind::Dihedral, 7), UnsupportedCombination);
  CHECK_THROWS_AS(FiniteGroup::make(GroupKind::Dihedral, 11), UnsupportedCombination);
}

TEST_CASE("dihedral centers") {
  auto D4 = FiniteGroup::make(GroupKind::Dihedral, 4);
  auto D5 = FiniteGroup::make(GroupKind::Dihedral, 5);
  auto D6 = FiniteGroup::make(GroupKind::Dihedral, 6);
  // Even n: r^(n/2) is the unique central rotation.
  CHECK(D4.is_central(D4.power(named(D4, "r"), 2)));
  CHECK_FALSE(D4.is_central(named(D4, "r")));
  CHECK(D6.is_central(D6.power(named(D6, "r"), 3)));
  // Odd n: trivial center.
  for (int i = 0; i < D5.order(); ++i)
    CHECK(D5.is_central((Index)i) == D5.is_identity((Index)i));
}

TEST_CASE("tetrahedral rotation group") {
  auto G = FiniteGroup::make(GroupKind::A4);
  CHECK(G.order() == 12);
  CHECK_FALSE(G.index_of_name("(12)").has_value());  // odd permutations absent

  int n1 = 0, n2 = 0, n3 = 0;
  for (int i = 0; i < 12; ++i) {
    int o = element_order(G, (Index)i);
    (o == 1 ? n1 : o == 2 ? n2 : n3)++;
    CHECK((o == 1 || o == 2 || o == 3));
  }
  CHECK(n1 == 1);
  CHECK(n2 == 3);
  CHECK(n3 == 8);

  // Klein four-subgroup products.
  CHECK(G.mul(named(G, "(12)(34)"), named(G, "(13)(24)")) == named(G, "(14)(23)"));
  // Composition is right-to-left: (123)(234) applies (234) first.
  CHECK(G.mul(named(G, "(123)"), named(G, "(234)")) == named(G, "(12)(34)"));

  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      for (int c = 0; c < 12; ++c)
        CHECK(G.mul(G.mul((Index)a, (Index)b), (Index)c) ==
              G.mul((Index)a, G.mul((Index)b, (Index)c)));
}

TEST_CASE("octahedral rotation group") {
  auto G = FiniteGroup::make(GroupKind::S4);
  CHECK(G.order() == 24);
  CHECK(G.mul(named(G, "(12)"), named(G, "(1234)")) == named(G, "(234)"));

  // Order profile of S4: 1 + 9 involutions + 8 three-cycles + 6 four-cycles.
  int count[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 24; ++i) count[element_order(G, (Index)i)]++;
  CHECK(count[1] == 1);
  CHECK(count[2] == 9);
  CHECK(count[3] == 8);
  CHECK(count[4] == 6);

  // The pants triple used by the flat square family multiplies to e.
  // Cycle names start at their smallest point, so (324) prints as (243).
  Index x = named(G, "(12)"), y = named(G, "(1234)"), z = named(G, "(243)");
  CHECK(G.mul(G.mul(x, y), z) == G.identity());
}

TEST_CASE("icosahedral rotation group") {
  auto G = FiniteGroup::make(GroupKind::A5);
  CHECK(G.order() == 60);
  Index x = named(G, "(12)(34)"), y = named(G, "(12345)");
  CHECK(element_order(G, x) == 2);
  CHECK(element_order(G, y) == 5);
  CHECK(element_order(G, G.mul(x, y)) == 3);
  CHECK(G.mul(G.mul(x, y), named(G, "(254)")) == G.identity());

  int count[6] = {0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 60; ++i) count[element_order(G, (Index)i)]++;
  CHECK(count[1] == 1);
  CHECK(count[2] == 15);
  CHECK(count[3] == 20);
  CHECK(count[5] == 24);

  CHECK(G.generates({x, y}));
  CHECK(G.closure({y}).size() == 5);
}

TEST_CASE("quaternion group Q8 keeps signs") {
  auto G = FiniteGroup::make(GroupKind::Q8);
  CHECK(G.order() == 8);
  CHECK_FALSE(G.sign_quotient());

  Index i = named(G, "i"), j = named(G, "j"), k = named(G, "k"), m1 = named(G, "-1");
  CHECK(G.mul(i, j) == k);
  CHECK(G.mul(j, i) == named(G, "-k"));
  CHECK(G.mul(i, i) == m1);
  CHECK(G.is_central(m1));
  CHECK_FALSE(G.is_central(i));
  CHECK(G.commutator(i, j) == m1);

  // Native SU(2) traces.
  CHECK(G.element(G.identity()).trace().rational_value() == Rational(2));
  CHECK(G.element(m1).trace().rational_value() == Rational(-2));
  CHECK(G.element(i).trace().is_zero());

  CHECK(G.generates({i, j}));
  CHECK(G.closure({i}).size() == 4);
  CHECK(G.is_abelian_subset({i, m1}));
  CHECK_FALSE(G.is_abelian_subset({i, j}));
}

TEST_CASE("element lookup and deterministic sort") {
  for (auto kind : {GroupKind::A4, GroupKind::S4, GroupKind::Q8}) {
    auto G = FiniteGroup::make(kind);
    for (int i = 0; i < G.order(); ++i) CHECK(G.index_of(G.element((Index)i)) == (Index)i);
  }
  // Sign classes: both lifts index the same rotation.
  auto D3 = FiniteGroup::make(GroupKind::Dihedral, 3);
  auto q = D3.element(named(D3, "r"));
  CHECK(D3.index_of(q) == D3.index_of(-q));
  auto half = CyclotomicNumber::from_rational(120, Rational(1, 2));
  CHECK_THROWS_AS(D3.index_of(Quaternion(half, half, half, -half)), InputError);
}

TEST_CASE("subgroup closure and generation") {
  auto D4 = FiniteGroup::make(GroupKind::Dihedral, 4);
  Index r = named(D4, "r"), s = named(D4, "s");
  CHECK(D4.closure({r}).size() == 4);
  CHECK(D4.generates({r, s}));
  // r^2 is central, so <r^2, s> is a proper Klein subgroup.
  CHECK(D4.closure({D4.power(r, 2), s}).size() == 4);
  CHECK_FALSE(D4.generates({D4.power(r, 2), s}));
  CHECK(D4.is_abelian_subset({r, D4.power(r, 3)}));
  CHECK_FALSE(D4.is_abelian_subset({r, s}));
}

TEST_CASE("character degrees and surface homomorphism counts") {
  auto D3 = FiniteGroup::make(GroupKind::Dihedral, 3);
  auto D4 = FiniteGroup::make(GroupKind::Dihedral, 4);
  auto A4 = FiniteGroup::make(GroupKind::A4);
  auto S4 = FiniteGroup::make(GroupKind::S4);
  auto A5 = FiniteGroup::make(GroupKind::A5);
  auto Q8 = FiniteGroup::make(GroupKind::Q8);

  CHECK(D3.character_degrees() == std::vector<int>{1, 1, 2});
  CHECK(D4.character_degrees() == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(A4.character_degrees() == std::vector<int>{1, 1, 1, 3});
  CHECK(S4.character_degrees() == std::vector<int>{1, 1, 2, 3, 3});
  CHECK(A5.character_degrees() == std::vector<int>{1, 3, 3, 4, 5});
  CHECK(Q8.character_degrees() == std::vector<int>{1, 1, 1, 1, 2});

  // Genus 2 counts.
  CHECK(D3.surface_hom_count(2) == 486);
  CHECK(D4.surface_hom_count(2) == 2176);
  CHECK(Q8.surface_hom_count(2) == 2176);
  CHECK(A4.surface_hom_count(2) == 5376);
  CHECK(S4.surface_hom_count(2) == 34176);
  CHECK(A5.surface_hom_count(2) == 286140);
  // Genus 1: |G| times the number of conjugacy classes.
  CHECK(D3.surface_hom_count(1) == 18);
  CHECK(Q8.surface_hom_count(1) == 40);
  // Genus 3 spot value: 6^5 * (2 + 1/16).
  CHECK(D3.surface_hom_count(3) == 16038);
  CHECK_THROWS_AS(D3.surface_hom_count(0), InputError);
  CHECK_THROWS_AS(A5.surface_hom_count(30), OverflowError);
}

TEST_CASE("binary cover structure") {
  auto D3 = FiniteGroup::make(GroupKind::Dihedral, 3);
  auto cover = BinaryCover::make(D3);
  CHECK(cover.order() == 12);
  CHECK(cover.is_minus_one(cover.minus_one()));
  CHECK(cover.mul(cover.minus_one(), cover.minus_one()) == cover.identity());
  CHECK(cover.element(cover.minus_one()) == Quaternion::minus_one(120));

  for (int b = 0; b < D3.order(); ++b) {
    auto lift = cover.section((Index)b);
    CHECK(cover.project(lift) == (Index)b);
    CHECK(cover.project(cover.other_lift(lift)) == (Index)b);
    CHECK(cover.other_lift(lift) != lift);
    CHECK(cover.element(cover.other_lift(lift)) == -cover.element(lift));
  }

  // The cover multiplication agrees with honest quaternion products.
  for (int a = 0; a < cover.order(); ++a)
    for (int b = 0; b < cover.order(); ++b)
      CHECK(cover.element(cover.mul((Index)a, (Index)b)) ==
            cover.element((Index)a) * cover.element((Index)b));
  for (int a = 0; a < cover.order(); ++a)
    CHECK(cover.element(cover.inv((Index)a)) == cover.element((Index)a).inverse());

  // Exact trace values: lift of r has trace 2 cos(pi/3) = 1.
  auto r = *D3.index_of_name("r");
  auto s = *D3.index_of_name("s");
  CHECK(cover.trace(cover.section(r)).rational_value() == Rational(1));
  CHECK(cover.trace(cover.section(s)).is_zero());
  CHECK(cover.trace(cover.identity()).rational_value() == Rational(2));

  CHECK_THROWS_AS(BinaryCover::make(FiniteGroup::make(GroupKind::Q8)), UnsupportedCombination);
}

TEST_CASE("commutators of lifts ignore the choice of lift") {
  for (auto kind : {GroupKind::Dihedral, GroupKind::A4}) {
    auto G = kind == GroupKind::Dihedral ? FiniteGroup::make(kind, 4) : FiniteGroup::make(kind);
    auto cover = BinaryCover::make(G);
    for (int a = 0; a < G.order(); ++a) {
      for (int b = 0; b < G.order(); ++b) {
        auto c = cover.commutator_of_lifts((Index)a, (Index)b);
        // Flip either lift (or both); the commutator must not move.
        for (int mask = 1; mask < 4; ++mask) {
          auto u = cover.section((Index)a), v = cover.section((Index)b);
          if (mask & 1) u = cover.other_lift(u);
          if (mask & 2) v = cover.other_lift(v);
          auto c2 = cover.mul(cover.mul(u, v), cover.mul(cover.inv(u), cover.inv(v)));
          CHECK(c2 == c);
        }
        CHECK(cover.project(c) == G.commutator((Index)a, (Index)b));
      }
    }
  }

  // Exact value: in D3, [lift s, lift r] = lift(r)^-2 with trace 2 cos(2 pi/3).
  auto D3 = FiniteGroup::make(GroupKind::Dihedral, 3);
  auto cover = BinaryCover::make(D3);
  auto c = cover.commutator_of_lifts(*D3.index_of_name("s"), *D3.index_of_name("r"));
  CHECK(cover.trace(c).rational_value() == Rational(-1));
}
