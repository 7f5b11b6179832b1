#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pants/group.hpp"
#include "pants/moves.hpp"
#include "pants/words.hpp"

namespace pants {

// Images of the standard surface-group generators a_1, b_1, ..., a_g, b_g in a
// finite group, stored as element indices in that order.  A tuple represents a
// homomorphism from the genus-g surface group exactly when it satisfies the
// defining relation prod_i [A_i, B_i] = 1; every operation below that needs
// the relation validates it and throws InputError otherwise.
struct SurfaceTuple {
  int genus = 0;
  std::vector<FiniteGroup::Index> values;  // A_1, B_1, ..., A_g, B_g

  bool operator==(const SurfaceTuple& o) const = default;
  bool operator<(const SurfaceTuple& o) const {
    if (genus != o.genus) return genus < o.genus;
    return values < o.values;
  }
};

// Validates genus >= 1, exactly 2*genus in-range entries, and the surface
// relation; throws InputError on any violation.
SurfaceTuple make_tuple(const FiniteGroup& group, int genus,
                        std::vector<FiniteGroup::Index> values);

// True iff the tuple has the right shape and prod_i [A_i, B_i] = 1.
bool satisfies_relator(const FiniteGroup& group, const SurfaceTuple& t);

// Image of a word in the generators under the homomorphism the tuple defines.
// The word may use handles 1..genus only.
FiniteGroup::Index evaluate_word(const FiniteGroup& group, const SurfaceTuple& t,
                                 const Word& word);

// Precomposition with the automorphism the move describes: each generator's
// image word is evaluated through the tuple.  Preserves the surface relation.
SurfaceTuple apply_move(const FiniteGroup& group, const MCGMove& move,
                        const SurfaceTuple& t);

// True iff the 2g images generate the whole group.
bool is_epi(const FiniteGroup& group, const SurfaceTuple& t);

// Default cap on the raw tuple space |G|^(2g) explored by enumeration, and on
// the number of states an orbit search may visit.  Large enough for every
// order-60 group at genus 2; larger jobs must raise the budget explicitly.
inline constexpr long long kDefaultTupleBudget = 60'000'000;

// |G|^(2g), saturated at LLONG_MAX on overflow.
long long raw_tuple_space(const FiniteGroup& group, int genus);

// All homomorphism tuples for the given genus, in ascending lexicographic
// order on the value vectors.  Throws BudgetExceeded when |G|^(2g) exceeds
// the budget.  The parallel and serial paths produce identical output; the
// flag exists so tests and benchmarks can compare them.
std::vector<SurfaceTuple> enumerate_homs(const FiniteGroup& group, int genus,
                                         long long budget = kDefaultTupleBudget,
                                         bool parallel = true);

// Streaming variant: calls sink for every homomorphism tuple in the same
// deterministic order instead of materialising the vector.
void enumerate_homs(const FiniteGroup& group, int genus,
                    const std::function<void(const SurfaceTuple&)>& sink,
                    long long budget = kDefaultTupleBudget, bool parallel = true);

// Sign of the lifted relator: lift each image to the double cover, take the
// commutator product, and read off which preimage of the identity it hits.
// Independent of the lift choices; invariant under conjugation and under
// every mapping-class move.  Returns +1 or -1.
int relator_lift_sign(const BinaryCover& cover, const SurfaceTuple& t);

// Lexicographically least tuple in the whole-group conjugation orbit.
// Idempotent, and equal on conjugate tuples.
SurfaceTuple canonical_form(const FiniteGroup& group, const SurfaceTuple& t);

// Outcome of a breadth-first search over conjugation-canonical forms.
//
//   orbit_size           states visited (the full orbit when the search ran
//                        to exhaustion; a lower bound when a witness stopped
//                        it early)
//   witness              engaged iff the target predicate was satisfied;
//                        holds the move names of a shortest path from the
//                        start (empty when the start itself satisfies it).
//                        Disengaged with the search complete means the
//                        predicate fails on the entire orbit -- budget
//                        exhaustion is reported via BudgetExceeded instead.
struct OrbitResult {
  long long orbit_size = 0;
  std::optional<std::vector<std::string>> witness;
};

// Breadth-first search from the start tuple under the given moves, exploring
// one state per conjugation class.  `target` may be null (pure orbit
// enumeration).  Because states are canonical forms, the target predicate
// must be conjugation-invariant; the witness path, replayed on the start
// tuple itself, then ends on a tuple satisfying it.  Throws BudgetExceeded
// once more than `budget` states have been visited.
OrbitResult orbit_bfs(const FiniteGroup& group, const SurfaceTuple& start,
                      const std::vector<MCGMove>& moves,
                      const std::function<bool(const SurfaceTuple&)>& target,
                      long long budget = kDefaultTupleBudget, bool parallel = true);

// Partition of a set of tuples into mapping-class-plus-conjugation orbits.
// orbit_of[i] is the orbit index of tuples[i]; indices are assigned in order
// of first appearance, so the numbering is deterministic.
struct OrbitPartition {
  int orbit_count = 0;
  std::vector<int> orbit_of;
};

OrbitPartition orbit_partition(const FiniteGroup& group,
                               const std::vector<SurfaceTuple>& tuples,
                               const std::vector<MCGMove>& moves,
                               long long budget = kDefaultTupleBudget,
                               bool parallel = true);

// A pants decomposition expressed inside the surface group: one word per
// decomposition curve and one word triple per pants, each triple listing the
// three boundary curves of that pants read with its boundary orientation.
// Every triple's product is freely trivial, and every curve appears in
// exactly two triples up to inversion and conjugation.
struct CurveWordSystem {
  int genus = 0;
  std::vector<Word> curves;
  std::vector<std::string> curve_names;
  std::vector<std::array<Word, 3>> pants;
  std::vector<std::string> pants_names;
};

// Chain-of-handles decomposition (genus >= 2): curves a_k for k = 1..g,
// gamma_k = prod_{i=k..g} [a_i, b_i] for k = 2..g, and d_k = [a_k, b_k] for
// k = 2..g-1 (3g-3 curves); handle pants H_k = (a_k, b_k a_k^-1 b_k^-1,
// [a_k, b_k]^-1) and spine pants S_k = (gamma_k^-1, d_k, gamma_{k+1}).
CurveWordSystem sausage_words(int genus);

// Two-vertex genus-2 decomposition along a_1, a_2, a_1 a_2, with pants
// triples (a_1, a_2, (a_1 a_2)^-1) and (a_1^-1, a_2^-1, a_2 a_1).
CurveWordSystem theta_words();

// Compatibility of the homomorphism with the decomposition: every curve image
// must avoid the degenerate set (the identity when the group is a rotation
// group; the centre {1, -1} for the unit quaternions), and the three boundary
// images of every pants must generate a non-abelian subgroup.  Conjugation-
// invariant, hence usable as an orbit-search target.
bool tuple_compatible(const FiniteGroup& group, const SurfaceTuple& t,
                      const CurveWordSystem& system);

// Uniformly-seeded random homomorphism tuple: g-1 handle pairs are drawn
// uniformly and the last pair is completed so the surface relation holds.
SurfaceTuple random_relator_tuple(const FiniteGroup& group, int genus,
                                  std::mt19937& rng);

}  // namespace pants
