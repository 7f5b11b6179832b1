#include "pants/cocycle.hpp"

#include <random>

#include "doctest.h"
#include "pants/errors.hpp"

using namespace pants;

namespace {

using Idx = FiniteGroup::Index;

// The dumbbell complex carries a hand-solved D4 cocycle: handle arcs s,
// connector arcs r^2, seams (1, r, r^-1) on both pants.  All four hexagon
// relations were verified by hand before freezing this table.
struct DumbbellD4 {
  TrivalentGraph graph = sausage_graph(2);
  PantsCW cw = PantsCW::build(graph);
  FiniteGroup d4 = FiniteGroup::make(GroupKind::Dihedral, 4);

  Cocycle hand_cocycle(bool twisted_bottom = false) {
    Idx e = d4.identity();
    Idx s = *d4.index_of_name("s");
    Idx r = *d4.index_of_name("r");
    Idx r2 = d4.mul(r, r);
    std::vector<Idx> v(cw.edge_count(), e);
    // Curves, in graph edge order: 0 = loop at pants 0, 1 = connector,
    // 2 = loop at pants 1.
    v[cw.arc_top(0)] = s;
    v[cw.arc_bottom(0)] = twisted_bottom ? d4.mul(s, r2) : s;
    v[cw.arc_top(1)] = r2;
    v[cw.arc_bottom(1)] = r2;
    v[cw.arc_top(2)] = s;
    v[cw.arc_bottom(2)] = s;
    for (int p = 0; p < 2; ++p) {
      v[cw.seam(p, 1)] = r;
      v[cw.seam(p, 2)] = d4.inv(r);
    }
    return Cocycle(&cw, &d4, v);
  }
};

Gauge random_gauge(const PantsCW& cw, const FiniteGroup& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  std::vector<Idx> d(cw.vertex_count());
  for (auto& x : d) x = (Idx)pick(rng);
  d[cw.basepoint()] = g.identity();
  return Gauge(&cw, &g, d);
}

}  // namespace

TEST_CASE("construction validates faces and ranges") {
  DumbbellD4 fx;
  CHECK_NOTHROW(fx.hand_cocycle());
  CHECK_NOTHROW(fx.hand_cocycle(true));
  CHECK_NOTHROW(Cocycle::identity(&fx.cw, &fx.d4));
  // Perturbing a single seam breaks a hexagon relation.
  auto vals = fx.hand_cocycle().edge_values();
  vals[fx.cw.seam(0, 1)] = *fx.d4.index_of_name("s");
  CHECK_THROWS_AS(Cocycle(&fx.cw, &fx.d4, vals), InputError);
  // Wrong sizes and out-of-range values are rejected.
  CHECK_THROWS_AS(Cocycle(&fx.cw, &fx.d4, std::vector<Idx>(3, 0)), InputError);
  std::vector<Idx> oor(fx.cw.edge_count(), fx.d4.identity());
  oor[0] = (Idx)fx.d4.order();
  CHECK_THROWS_AS(Cocycle(&fx.cw, &fx.d4, oor), InputError);
  CHECK_THROWS_AS(Cocycle(nullptr, &fx.d4, {}), InputError);
}

TEST_CASE("holonomy basics") {
  DumbbellD4 fx;
  auto c = Cocycle::identity(&fx.cw, &fx.d4);
  // All-identity cocycle: identity holonomy on every loop.
  for (int k = 0; k < 3; ++k)
    CHECK(fx.d4.is_identity(c.holonomy(fx.cw.pants_loop(0, k))));
  for (int curve = 0; curve < 3; ++curve)
    CHECK(fx.d4.is_identity(c.curve_holonomy(curve)));
  // Face boundaries always have identity holonomy (cocycle condition).
  auto h = fx.hand_cocycle();
  for (int f = 0; f < fx.cw.face_count(); ++f) {
    const auto& b = fx.cw.face_boundary(f);
    CHECK(fx.d4.is_identity(h.holonomy(EdgePath(b.begin(), b.end()))));
  }
  // Concatenated loops multiply holonomies.
  EdgePath l0 = fx.cw.pants_loop(0, 0), l1 = fx.cw.pants_loop(0, 1);
  EdgePath l1l0 = l1;
  l1l0.insert(l1l0.end(), l0.begin(), l0.end());
  CHECK(h.holonomy(l1l0) == fx.d4.mul(h.holonomy(l1), h.holonomy(l0)));
  // Open paths are refused.
  CHECK_THROWS_AS(h.holonomy({{fx.cw.arc_top(0), 1}}), InputError);
  CHECK_THROWS_AS(h.holonomy({}), InputError);
}

TEST_CASE("hand cocycle holonomies") {
  DumbbellD4 fx;
  auto h = fx.hand_cocycle();
  // Curve 0: s*s = 1; curve 1: r^2 r^2 = 1; curve 2: s*s = 1.
  for (int curve = 0; curve < 3; ++curve)
    CHECK(fx.d4.is_identity(h.curve_holonomy(curve)));
  // Twisting the bottom handle arc by the central r^2 makes curve 0's
  // holonomy r^2.
  auto t = fx.hand_cocycle(true);
  Idx r2 = fx.d4.mul(*fx.d4.index_of_name("r"), *fx.d4.index_of_name("r"));
  CHECK(t.curve_holonomy(0) == r2);
  CHECK(fx.d4.is_identity(t.curve_holonomy(1)));
}

TEST_CASE("pants boundary product is the identity") {
  DumbbellD4 fx;
  std::mt19937 rng(20260817);
  for (const Cocycle& base :
       {fx.hand_cocycle(), fx.hand_cocycle(true), Cocycle::identity(&fx.cw, &fx.d4)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Cocycle c = gauge_transform(base, random_gauge(fx.cw, fx.d4, rng));
      for (int p = 0; p < fx.cw.pants_count(); ++p) {
        auto [h2, h1, h0] = c.pants_boundary_holonomies(p);
        CHECK(fx.d4.is_identity(fx.d4.mul(fx.d4.mul(h2, h1), h0)));
      }
    }
  }
  // Also on a bigger complex over A4, via gauge twists of the identity.
  auto g = necklace_graph(3);
  auto cw = PantsCW::build(g);
  FiniteGroup a4 = FiniteGroup::make(GroupKind::A4, 0);
  auto base = Cocycle::identity(&cw, &a4);
  for (int trial = 0; trial < 25; ++trial) {
    Cocycle c = gauge_transform(base, random_gauge(cw, a4, rng));
    for (int p = 0; p < cw.pants_count(); ++p) {
      auto [h2, h1, h0] = c.pants_boundary_holonomies(p);
      CHECK(a4.is_identity(a4.mul(a4.mul(h2, h1), h0)));
    }
  }
}

TEST_CASE("gauge transforms") {
  DumbbellD4 fx;
  std::mt19937 rng(7);
  auto h = fx.hand_cocycle(true);
  // Identity gauge: unchanged.
  CHECK(gauge_transform(h, Gauge::identity(&fx.cw, &fx.d4)) == h);
  // Holonomy of basepoint loops is gauge-invariant; the basepoint is P of
  // curve 0, whose curve loop is based there.
  REQUIRE(fx.cw.vertex_P(0) == fx.cw.basepoint());
  for (int trial = 0; trial < 50; ++trial) {
    Gauge d = random_gauge(fx.cw, fx.d4, rng);
    Cocycle c = gauge_transform(h, d);
    CHECK(c.curve_holonomy(0) == h.curve_holonomy(0));
    // Other curves conjugate by the gauge at their base vertex.
    for (int curve = 1; curve < 3; ++curve) {
      Idx base = d.at(fx.cw.vertex_P(curve));
      CHECK(c.curve_holonomy(curve) ==
            fx.d4.conjugate(base, h.curve_holonomy(curve)));
    }
  }
  // Gauge validation.
  std::vector<Idx> bad(fx.cw.vertex_count(), fx.d4.identity());
  bad[fx.cw.basepoint()] = *fx.d4.index_of_name("r");
  CHECK_THROWS_AS(Gauge(&fx.cw, &fx.d4, bad), InputError);
  CHECK_THROWS_AS(Gauge(&fx.cw, &fx.d4, std::vector<Idx>(2, 0)), InputError);
}

TEST_CASE("find_gauge round trip") {
  DumbbellD4 fx;
  std::mt19937 rng(99);
  for (const Cocycle& base : {fx.hand_cocycle(), fx.hand_cocycle(true)}) {
    for (int trial = 0; trial < 50; ++trial) {
      Gauge d = random_gauge(fx.cw, fx.d4, rng);
      Cocycle c2 = gauge_transform(base, d);
      auto found = find_gauge(base, c2);
      REQUIRE(found.has_value());
      CHECK(*found == d);  // unique given identity at the basepoint
      CHECK(gauge_transform(base, *found) == c2);
    }
  }
}

TEST_CASE("find_gauge rejects different holonomy spectra") {
  DumbbellD4 fx;
  // Curve 0 holonomy differs (identity vs central r^2), so no gauge exists.
  auto plain = fx.hand_cocycle();
  auto twisted = fx.hand_cocycle(true);
  CHECK(!find_gauge(plain, twisted).has_value());
  CHECK(!find_gauge(twisted, plain).has_value());
  CHECK(!find_gauge(Cocycle::identity(&fx.cw, &fx.d4), twisted).has_value());
  // Mismatched complexes are an input error, not a "no".
  auto other_cw = PantsCW::build(sausage_graph(2));
  auto other = Cocycle::identity(&other_cw, &fx.d4);
  CHECK_THROWS_AS(find_gauge(plain, other), InputError);
}

TEST_CASE("lifting obstruction basics") {
  DumbbellD4 fx;
  BinaryCover cover = BinaryCover::make(fx.d4);
  // All-identity cocycle lifts: +1.
  CHECK(lifting_obstruction(Cocycle::identity(&fx.cw, &fx.d4), cover) == 1);
  // The hand cocycles produce a well-defined sign.
  int s_plain = lifting_obstruction(fx.hand_cocycle(), cover);
  CHECK((s_plain == 1 || s_plain == -1));
  // Flip count must match the edge count when provided.
  CHECK_THROWS_AS(
      lifting_obstruction(fx.hand_cocycle(), cover, std::vector<char>(3, 1)),
      InputError);
  // A cover over the wrong group is refused.
  FiniteGroup d3 = FiniteGroup::make(GroupKind::Dihedral, 3);
  BinaryCover wrong = BinaryCover::make(d3);
  CHECK_THROWS_AS(lifting_obstruction(fx.hand_cocycle(), wrong), InputError);
}

TEST_CASE("lifting obstruction is independent of lifts and gauges") {
  DumbbellD4 fx;
  BinaryCover cover = BinaryCover::make(fx.d4);
  std::mt19937 rng(424242);
  std::bernoulli_distribution coin(0.5);
  for (const Cocycle& base : {fx.hand_cocycle(), fx.hand_cocycle(true)}) {
    int expected = lifting_obstruction(base, cover);
    // 100 random re-choices of the edge lifts.
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<char> flips(fx.cw.edge_count());
      for (auto& f : flips) f = coin(rng);
      CHECK(lifting_obstruction(base, cover, flips) == expected);
    }
    // Random gauge transformations preserve the sign.
    for (int trial = 0; trial < 50; ++trial) {
      Cocycle c = gauge_transform(base, random_gauge(fx.cw, fx.d4, rng));
      CHECK(lifting_obstruction(c, cover) == expected);
    }
  }
}
