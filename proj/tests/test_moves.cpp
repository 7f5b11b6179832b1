#include "pants/moves.hpp"

#include <set>

#include "doctest.h"
#include "pants/errors.hpp"

using namespace pants;

namespace {

MCGMove chain(const MCGMove& x, const MCGMove& y, const MCGMove& z) {
  return compose_moves(compose_moves(x, y), z);
}

bool same_action(const MCGMove& u, const MCGMove& v) { return u.images == v.images; }

}  // namespace

TEST_CASE("move set size and unique names") {
  for (int g : {1, 2, 3, 4, 5}) {
    auto moves = move_set(g);
    CHECK((int)moves.size() == 8 * g - 2);
    std::set<std::string> names;
    for (const auto& m : moves) {
      names.insert(m.name);
      CHECK(m.genus == g);
      CHECK((int)m.images.size() == 2 * g);
    }
    CHECK(names.size() == moves.size());
  }
  CHECK_THROWS_AS(move_set(0), InputError);
  CHECK_THROWS_AS(find_move(move_set(2), "tz9"), InputError);
}

TEST_CASE("every move respects the relator") {
  for (int g : {2, 3, 4, 5}) {
    for (const auto& m : move_set(g)) {
      INFO("move ", m.name, " genus ", g);
      CHECK(relator_goes_to_rotation(m));
      // Only the global twist moves the relator off itself (to a rotation).
      bool is_global = m.name == "tg" || m.name == "tg~";
      CHECK(relator_exact(m) == !is_global);
    }
  }
}

TEST_CASE("each move composes with its partner to the identity") {
  for (int g : {2, 3}) {
    auto moves = move_set(g);
    auto id = identity_move(g);
    for (const auto& m : moves) {
      std::string partner =
          m.name.back() == '~' ? m.name.substr(0, m.name.size() - 1) : m.name + "~";
      const auto& p = find_move(moves, partner);
      INFO("pair ", m.name, " / ", partner);
      CHECK(same_action(compose_moves(m, p), id));
      CHECK(same_action(compose_moves(p, m), id));
    }
  }
}

TEST_CASE("connector twist power law") {
  for (int g : {2, 3}) {
    auto moves = move_set(g);
    const auto& tc1 = find_move(moves, "tc1");
    Word kappa = Word::parse("b1^-1 a2");
    // tc1 fixes its own twisting curve.
    CHECK(tc1.apply(kappa) == kappa);
    // tc1^k(a1) = a1 kappa^k.
    Word cur = Word::gen(a_gen(1));
    for (int k = 1; k <= 4; ++k) {
      cur = tc1.apply(cur);
      CHECK(cur == Word::gen(a_gen(1)) * kappa.power(k));
    }
  }
}

TEST_CASE("braid relations hold for crossing pairs") {
  for (int g : {2, 3}) {
    auto moves = move_set(g);
    auto braid = [&](const char* x, const char* y) {
      const auto& X = find_move(moves, x);
      const auto& Y = find_move(moves, y);
      INFO("braid pair ", x, " ", y);
      CHECK(same_action(chain(X, Y, X), chain(Y, X, Y)));
    };
    braid("ta1~", "tb1");
    braid("ta1", "tb1~");
    braid("tb1", "ta1~");
    braid("tc1", "ta1");
    braid("tc1~", "ta1~");
    braid("tc1", "tb2~");
    braid("tc1~", "tb2");
  }
}

TEST_CASE("same-handedness pairs fail the braid relation") {
  // The curves a_1 and b_1 cross once, but the braid relation needs twists
  // of matching handedness; this pins the orientation convention.
  auto moves = move_set(2);
  const auto& ta1 = find_move(moves, "ta1");
  const auto& tb1 = find_move(moves, "tb1");
  CHECK_FALSE(same_action(chain(ta1, tb1, ta1), chain(tb1, ta1, tb1)));
}

TEST_CASE("disjoint moves commute") {
  for (int g : {2, 3}) {
    auto moves = move_set(g);
    auto commute = [&](const char* x, const char* y) {
      const auto& X = find_move(moves, x);
      const auto& Y = find_move(moves, y);
      INFO("commuting pair ", x, " ", y);
      CHECK(same_action(compose_moves(X, Y), compose_moves(Y, X)));
    };
    commute("ta1", "ta2");
    commute("tc1", "tb1");
    commute("tc1", "ta2");
  }
}

TEST_CASE("handle swap acts as expected") {
  auto moves = move_set(3);
  const auto& sg1 = find_move(moves, "sg1");
  CHECK(sg1.apply(Word::gen(a_gen(1))) == Word::gen(a_gen(2)));
  CHECK(sg1.apply(Word::gen(b_gen(1))) == Word::gen(b_gen(2)));
  CHECK(sg1.apply(Word::gen(a_gen(3))) == Word::gen(a_gen(3)));
  Word Q = commutator(Word::gen(a_gen(2)), Word::gen(b_gen(2)));
  CHECK(sg1.apply(Word::gen(a_gen(2))) == Word::gen(a_gen(1)).conjugated_by(Q.inverse()));
  // Swapping twice returns every generator to a conjugate of itself, and
  // composing with the inverse returns it exactly.
  auto both = compose_moves(sg1, find_move(moves, "sg1~"));
  CHECK(same_action(both, identity_move(3)));
}

TEST_CASE("homology action is integral symplectic") {
  for (int g : {2, 3, 4}) {
    for (const auto& m : move_set(g)) {
      INFO("move ", m.name, " genus ", g);
      CHECK(is_symplectic(homology_matrix(m)));
    }
  }
  // Spot values: ta1 is the transvection b1 -> b1 + a1.
  auto moves = move_set(2);
  auto M = homology_matrix(find_move(moves, "ta1"));
  CHECK(M[0][1] == 1);  // a1 row, b1 column
  CHECK(M[0][0] == 1);
  CHECK(M[1][1] == 1);
  CHECK(M[2][3] == 0);
  // tg subtracts every b from every a.
  auto Mg = homology_matrix(find_move(moves, "tg"));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(Mg[2 * i + 1][2 * j] == -1);
}

TEST_CASE("composition bookkeeping") {
  auto m2 = move_set(2);
  auto m3 = move_set(3);
  CHECK_THROWS_AS(compose_moves(find_move(m2, "ta1"), find_move(m3, "ta1")), InputError);
  auto c = compose_moves(find_move(m2, "ta1"), find_move(m2, "tb1"));
  CHECK(c.name == "ta1;tb1");
  // "first then second": a1 -> (ta1 fixes a1) -> tb1 sends a1 to a1 b1.
  CHECK(c.images[0] == Word::parse("a1 b1"));
}
