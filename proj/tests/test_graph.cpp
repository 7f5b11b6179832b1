#include "pants/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "pants/errors.hpp"

using namespace pants;

namespace {

// Builds a pairing by explicit gluing for hand-written examples.
std::vector<int> glued(int vertices, std::vector<std::pair<int, int>> pairs) {
  std::vector<int> p(3 * vertices, -1);
  for (auto [x, y] : pairs) {
    p[x] = y;
    p[y] = x;
  }
  return p;
}

int loop_count(const TrivalentGraph& g) { return (int)g.loop_vertices().size(); }

int max_multiplicity(const TrivalentGraph& g) {
  std::map<std::pair<int, int>, int> mult;
  for (auto [h1, h2] : g.edges()) {
    int v = h1 / 3, w = h2 / 3;
    if (v != w) mult[{std::min(v, w), std::max(v, w)}]++;
  }
  int m = 0;
  for (auto& kv : mult) m = std::max(m, kv.second);
  return m;
}

}  // namespace

TEST_CASE("pairing validation") {
  // Dumbbell: loops at both vertices, one connector.
  auto g = TrivalentGraph::from_pairing(glued(2, {{0, 1}, {3, 4}, {2, 5}}));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.genus() == 2);
  CHECK(g.loop_vertices() == std::vector<int>{0, 1});
  CHECK(g.has_one_edge_loop());
  CHECK(g.pair_of(0) == 1);
  CHECK(TrivalentGraph::vertex_of(5) == 1);
  CHECK(TrivalentGraph::slot_of(5) == 2);
  CHECK(g.edge_is_loop(g.edge_of(0)));
  CHECK(!g.edge_is_loop(g.edge_of(2)));

  // Not an involution.
  std::vector<int> bad = glued(2, {{0, 1}, {3, 4}, {2, 5}});
  bad[5] = 0;
  CHECK_THROWS_AS(TrivalentGraph::from_pairing(bad), InputError);
  // Fixed point.
  std::vector<int> fixed = glued(2, {{0, 1}, {3, 4}});
  fixed[2] = 2;
  fixed[5] = 5;
  CHECK_THROWS_AS(TrivalentGraph::from_pairing(fixed), InputError);
  // Out of range.
  std::vector<int> oor = glued(2, {{0, 1}, {3, 4}, {2, 5}});
  oor[2] = 17;
  CHECK_THROWS_AS(TrivalentGraph::from_pairing(oor), InputError);
  // Odd vertex count.
  CHECK_THROWS_AS(TrivalentGraph::from_pairing(std::vector<int>(9, 0)), InputError);
  CHECK_THROWS_AS(TrivalentGraph::from_pairing({}), InputError);
  // Two disjoint dumbbells: valid involution, not connected.
  CHECK_THROWS_AS(TrivalentGraph::from_pairing(glued(
                      4, {{0, 1}, {3, 4}, {2, 5}, {6, 7}, {9, 10}, {8, 11}})),
                  InputError);
}

TEST_CASE("sausage family") {
  CHECK_THROWS_AS(sausage_graph(1), InputError);
  auto g2 = sausage_graph(2);
  CHECK(g2.vertex_count() == 2);
  CHECK(loop_count(g2) == 2);

  auto g3 = sausage_graph(3);
  CHECK(g3.vertex_count() == 4);
  CHECK(g3.edge_count() == 6);
  CHECK(g3.genus() == 3);
  CHECK(loop_count(g3) == 3);
  // Three loop handles hanging off one connector: the 3-loop star.
  auto star = TrivalentGraph::from_pairing(glued(
      4, {{0, 1}, {3, 4}, {6, 7}, {2, 9}, {5, 10}, {8, 11}}));
  CHECK(g3.isomorphic_to(star));

  for (int g = 2; g <= 25; ++g) {
    auto s = sausage_graph(g);
    CHECK(s.vertex_count() == 2 * g - 2);
    CHECK(s.edge_count() == 3 * g - 3);
    CHECK(s.genus() == g);
    CHECK(loop_count(s) == g);
  }
}

TEST_CASE("necklace family") {
  CHECK_THROWS_AS(necklace_graph(1), InputError);
  auto g2 = necklace_graph(2);  // theta
  CHECK(g2.vertex_count() == 2);
  CHECK(g2.edge_count() == 3);
  CHECK(loop_count(g2) == 0);
  CHECK(max_multiplicity(g2) == 3);

  auto g3 = necklace_graph(3);  // 4-cycle, opposite sides doubled
  CHECK(g3.vertex_count() == 4);
  CHECK(g3.edge_count() == 6);
  CHECK(loop_count(g3) == 0);
  CHECK(max_multiplicity(g3) == 2);
  auto hand = TrivalentGraph::from_pairing(glued(
      4, {{0, 3}, {1, 4}, {6, 9}, {7, 10}, {5, 8}, {11, 2}}));
  CHECK(g3.isomorphic_to(hand));

  for (int g = 2; g <= 25; ++g) {
    auto s = necklace_graph(g);
    CHECK(s.vertex_count() == 2 * g - 2);
    CHECK(s.edge_count() == 3 * g - 3);
    CHECK(s.genus() == g);
    CHECK(loop_count(s) == 0);
  }
}

TEST_CASE("canonical form and isomorphism") {
  auto g3 = sausage_graph(3);
  // Relabel the star: connector first instead of last.
  auto relabeled = TrivalentGraph::from_pairing(glued(
      4, {{3, 4}, {6, 7}, {9, 10}, {0, 5}, {1, 8}, {2, 11}}));
  CHECK(g3.isomorphic_to(relabeled));
  CHECK(g3.canonical_form() == relabeled.canonical_form());
  CHECK(!g3.isomorphic_to(necklace_graph(3)));
  CHECK(!sausage_graph(2).isomorphic_to(necklace_graph(2)));
  CHECK(!g3.isomorphic_to(sausage_graph(2)));  // different sizes

  // Supported through 16 vertices; beyond that the certificate refuses.
  CHECK(sausage_graph(9).canonical_form() == sausage_graph(9).canonical_form());
  CHECK_THROWS_AS(sausage_graph(10).canonical_form(), UnsupportedCombination);
}

TEST_CASE("enumeration at two vertices") {
  auto all = enumerate_trivalent(2);
  REQUIRE(all.size() == 2);
  bool saw_theta = false, saw_dumbbell = false;
  for (const auto& g : all) {
    CHECK(g.vertex_count() == 2);
    if (g.isomorphic_to(necklace_graph(2))) saw_theta = true;
    if (g.isomorphic_to(sausage_graph(2))) saw_dumbbell = true;
  }
  CHECK(saw_theta);
  CHECK(saw_dumbbell);
  CHECK(enumerate_trivalent(0).empty());
  CHECK_THROWS_AS(enumerate_trivalent(9), InputError);
  CHECK_THROWS_AS(enumerate_trivalent(-1), InputError);
}

TEST_CASE("enumeration at four vertices") {
  auto all = enumerate_trivalent(4);
  REQUIRE(all.size() == 7);  // 2 on two vertices + 5 on four
  // The five 4-vertex classes split by (loop count, max multiplicity).
  std::multiset<std::pair<int, int>> shapes;
  int four = 0;
  for (const auto& g : all) {
    if (g.vertex_count() != 4) continue;
    ++four;
    shapes.insert({loop_count(g), max_multiplicity(g)});
  }
  CHECK(four == 5);
  std::multiset<std::pair<int, int>> expected = {
      {3, 1},  // three loops on a star (sausage)
      {2, 2},  // two loops chained through a doubled middle
      {1, 2},  // one loop feeding a doubled pair
      {0, 1},  // the complete graph on four vertices
      {0, 2},  // the necklace
  };
  CHECK(shapes == expected);
  // Every output is pairwise non-isomorphic.
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      CHECK(!all[i].isomorphic_to(all[j]));
  bool saw_sausage = false, saw_necklace = false;
  for (const auto& g : all) {
    if (g.vertex_count() != 4) continue;
    if (g.isomorphic_to(sausage_graph(3))) saw_sausage = true;
    if (g.isomorphic_to(necklace_graph(3))) saw_necklace = true;
  }
  CHECK(saw_sausage);
  CHECK(saw_necklace);
}

namespace {

// Independent oracle: every perfect matching on the 12 half-edges of four
// vertices, deduplicated by canonical form.  Exercises none of the
// enumerator's backtracking code.
void all_matchings(std::vector<int>& p, int& total,
                   std::set<std::vector<int>>& classes) {
  int h = -1;
  for (int i = 0; i < (int)p.size(); ++i)
    if (p[i] < 0) {
      h = i;
      break;
    }
  if (h < 0) {
    ++total;
    try {
      classes.insert(TrivalentGraph::from_pairing(p).canonical_form());
    } catch (const InputError&) {
      // disconnected matching; not a pants graph
    }
    return;
  }
  for (int j = h + 1; j < (int)p.size(); ++j) {
    if (p[j] >= 0) continue;
    p[h] = j;
    p[j] = h;
    all_matchings(p, total, classes);
    p[h] = -1;
    p[j] = -1;
  }
}

}  // namespace

TEST_CASE("matching oracle confirms the four-vertex census") {
  std::vector<int> p(12, -1);
  int total = 0;
  std::set<std::vector<int>> classes;
  all_matchings(p, total, classes);
  CHECK(total == 10395);  // 11!! perfect matchings on 12 points
  CHECK(classes.size() == 5);
  std::set<std::vector<int>> enumerated;
  for (const auto& g : enumerate_trivalent(4))
    if (g.vertex_count() == 4) enumerated.insert(g.canonical_form());
  CHECK(classes == enumerated);
}

TEST_CASE("cutting schedule on the dumbbell") {
  auto sched = cutting_schedule(sausage_graph(2));
  REQUIRE(sched.steps.size() == 3);
  CHECK(sched.steps[0].kind == CutStep::Kind::RemoveLoopVertex);
  CHECK(sched.steps[1].kind == CutStep::Kind::CutEdge);
  CHECK(sched.steps[2].kind == CutStep::Kind::FinalCut);
  CHECK(sched.steps[2].consumed.size() == 3);
  CHECK(replay_schedule(sched).isomorphic_to(sausage_graph(2)));
}

TEST_CASE("cutting schedule on sausages") {
  for (int g = 3; g <= 6; ++g) {
    auto graph = sausage_graph(g);
    auto sched = cutting_schedule(graph);
    int removals = 0, cuts = 0, finals = 0, loops = 0;
    for (const auto& s : sched.steps) {
      switch (s.kind) {
        case CutStep::Kind::RemoveLoopVertex: ++loops; break;
        case CutStep::Kind::CutEdge: ++cuts; break;
        case CutStep::Kind::RemovePants: ++removals; break;
        case CutStep::Kind::FinalCut: ++finals; break;
      }
    }
    CHECK(loops == 1);
    CHECK(cuts == g - 1);
    CHECK(removals == 2 * g - 4);
    CHECK(finals == 1);
    CHECK(replay_schedule(sched).isomorphic_to(graph));
  }
}

TEST_CASE("graphs without a one-edge loop are refused") {
  CHECK_THROWS_AS(cutting_schedule(necklace_graph(2)), NoOneEdgeLoop);
  CHECK_THROWS_AS(cutting_schedule(necklace_graph(3)), NoOneEdgeLoop);
  CHECK_THROWS_AS(cutting_schedule(necklace_graph(5)), NoOneEdgeLoop);
  // K4.
  auto k4 = TrivalentGraph::from_pairing(glued(
      4, {{0, 3}, {1, 6}, {2, 9}, {4, 7}, {5, 10}, {8, 11}}));
  CHECK_THROWS_AS(cutting_schedule(k4), NoOneEdgeLoop);
}

TEST_CASE("cutting schedule across the census") {
  auto all = enumerate_trivalent(6);
  int with_loop = 0, without = 0;
  for (const auto& g : all) {
    if (g.has_one_edge_loop()) {
      ++with_loop;
      auto sched = cutting_schedule(g);
      CHECK(replay_schedule(sched).isomorphic_to(g));
      // Vertex-removing steps walk the count down to zero one at a time.
      int removals = 0;
      for (const auto& s : sched.steps)
        if (s.kind != CutStep::Kind::CutEdge) ++removals;
      CHECK(removals == g.vertex_count());
    } else {
      ++without;
      CHECK_THROWS_AS(cutting_schedule(g), NoOneEdgeLoop);
    }
  }
  CHECK(with_loop + without == (int)all.size());
  CHECK(with_loop >= 1);
  CHECK(without >= 1);
}
