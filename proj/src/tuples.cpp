#include "pants/tuples.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pants/errors.hpp"

namespace pants {
namespace {

using Idx = FiniteGroup::Index;
using Vec = std::vector<Idx>;

struct VecHash {
  size_t operator()(const Vec& v) const {
    size_t h = 1469598103934665603ull;
    for (Idx x : v) {
      h ^= (size_t)x + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void validate_shape(const FiniteGroup& group, const SurfaceTuple& t) {
  if (t.genus < 1) throw InputError("tuple genus must be at least 1");
  if ((int)t.values.size() != 2 * t.genus)
    throw InputError("tuple must hold exactly 2*genus entries");
  for (Idx v : t.values)
    if (v >= group.order()) throw InputError("tuple entry out of range for the group");
}

void validate_hom(const FiniteGroup& group, const SurfaceTuple& t) {
  validate_shape(group, t);
  if (!satisfies_relator(group, t))
    throw InputError("tuple does not satisfy the surface relation");
}

// Ascending (a, b) pairs with [a, b] = t, grouped by t.
std::vector<std::vector<std::pair<Idx, Idx>>> commutator_solutions(
    const FiniteGroup& group) {
  std::vector<std::vector<std::pair<Idx, Idx>>> table(group.order());
  for (Idx a = 0; a < group.order(); ++a)
    for (Idx b = 0; b < group.order(); ++b)
      table[group.commutator(a, b)].push_back({a, b});
  return table;
}

int thread_slot() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

int thread_slots() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

SurfaceTuple make_tuple(const FiniteGroup& group, int genus,
                        std::vector<FiniteGroup::Index> values) {
  SurfaceTuple t{genus, std::move(values)};
  validate_hom(group, t);
  return t;
}

bool satisfies_relator(const FiniteGroup& group, const SurfaceTuple& t) {
  if (t.genus < 1 || (int)t.values.size() != 2 * t.genus) return false;
  Idx p = group.identity();
  for (int i = 0; i < t.genus; ++i)
    p = group.mul(p, group.commutator(t.values[2 * i], t.values[2 * i + 1]));
  return group.is_identity(p);
}

FiniteGroup::Index evaluate_word(const FiniteGroup& group, const SurfaceTuple& t,
                                 const Word& word) {
  validate_shape(group, t);
  if (word.max_handle() > t.genus)
    throw InputError("word uses a handle beyond the tuple's genus");
  Idx v = group.identity();
  for (Letter l : word.letters()) {
    Idx g = (l > 0) ? t.values[l - 1] : group.inv(t.values[-l - 1]);
    v = group.mul(v, g);
  }
  return v;
}

SurfaceTuple apply_move(const FiniteGroup& group, const MCGMove& move,
                        const SurfaceTuple& t) {
  validate_shape(group, t);
  if (move.genus != t.genus)
    throw InputError("move genus does not match tuple genus");
  SurfaceTuple out;
  out.genus = t.genus;
  out.values.resize(t.values.size());
  for (size_t i = 0; i < t.values.size(); ++i)
    out.values[i] = evaluate_word(group, t, move.images[i]);
  if (satisfies_relator(group, t) && !satisfies_relator(group, out))
    throw InputError("move does not preserve the surface relation");
  return out;
}

bool is_epi(const FiniteGroup& group, const SurfaceTuple& t) {
  validate_shape(group, t);
  return group.generates(t.values);
}

long long raw_tuple_space(const FiniteGroup& group, int genus) {
  if (genus < 1) throw InputError("genus must be at least 1");
  long long r = 1;
  for (int i = 0; i < 2 * genus; ++i) {
    if (r > LLONG_MAX / group.order()) return LLONG_MAX;
    r *= group.order();
  }
  return r;
}

void enumerate_homs(const FiniteGroup& group, int genus,
                    const std::function<void(const SurfaceTuple&)>& sink,
                    long long budget, bool parallel) {
  if (genus < 1) throw InputError("genus must be at least 1");
  if (!sink) throw InputError("enumeration sink must be callable");
  const long long raw = raw_tuple_space(group, genus);
  if (raw > budget)
    throw BudgetExceeded("raw tuple space " + std::to_string(raw) +
                         " exceeds the enumeration budget " + std::to_string(budget));

  const int n = group.order();
  const auto table = commutator_solutions(group);
  const int prefix_len = 2 * (genus - 1);
  long long prefix_count = 1;
  for (int i = 0; i < prefix_len; ++i) prefix_count *= n;

  // A tuple is a free choice of the first g-1 handle pairs followed by a
  // solution of [A_g, B_g] = (prefix product)^-1.  Two passes keep the
  // output in ascending lexicographic order without any locking: the first
  // counts solutions per prefix, the second writes into precomputed slots.
  const auto decode = [&](long long p, Vec& prefix) {
    for (int i = prefix_len - 1; i >= 0; --i) {
      prefix[i] = (Idx)(p % n);
      p /= n;
    }
  };
  const auto target_of = [&](const Vec& prefix) {
    Idx prod = group.identity();
    for (int i = 0; i + 1 < (int)prefix.size(); i += 2)
      prod = group.mul(prod, group.commutator(prefix[i], prefix[i + 1]));
    return group.inv(prod);
  };

  std::vector<long long> offset(prefix_count + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long p = 0; p < prefix_count; ++p) {
    Vec prefix(prefix_len);
    decode(p, prefix);
    offset[p + 1] = (long long)table[target_of(prefix)].size();
  }
  for (long long p = 0; p < prefix_count; ++p) offset[p + 1] += offset[p];
  const long long total = offset[prefix_count];

  const int width = 2 * genus;
  std::vector<Idx> flat((size_t)total * width);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long p = 0; p < prefix_count; ++p) {
    Vec prefix(prefix_len);
    decode(p, prefix);
    const auto& sols = table[target_of(prefix)];
    for (size_t s = 0; s < sols.size(); ++s) {
      Idx* slot = flat.data() + (size_t)(offset[p] + (long long)s) * width;
      std::copy(prefix.begin(), prefix.end(), slot);
      slot[width - 2] = sols[s].first;
      slot[width - 1] = sols[s].second;
    }
  }

  SurfaceTuple t;
  t.genus = genus;
  t.values.resize(width);
  for (long long i = 0; i < total; ++i) {
    const Idx* slot = flat.data() + (size_t)i * width;
    std::copy(slot, slot + width, t.values.begin());
    sink(t);
  }
}

std::vector<SurfaceTuple> enumerate_homs(const FiniteGroup& group, int genus,
                                         long long budget, bool parallel) {
  std::vector<SurfaceTuple> out;
  enumerate_homs(
      group, genus, [&](const SurfaceTuple& t) { out.push_back(t); }, budget,
      parallel);
  return out;
}

int relator_lift_sign(const BinaryCover& cover, const SurfaceTuple& t) {
  validate_hom(cover.base(), t);
  BinaryCover::Index r = cover.identity();
  for (int i = 0; i < t.genus; ++i)
    r = cover.mul(r, cover.commutator_of_lifts(t.values[2 * i], t.values[2 * i + 1]));
  if (!cover.is_plus_minus_one(r))
    throw InternalError("lifted relator of a homomorphism tuple is not central");
  return cover.is_minus_one(r) ? -1 : +1;
}

SurfaceTuple canonical_form(const FiniteGroup& group, const SurfaceTuple& t) {
  validate_shape(group, t);
  Vec best = t.values;
  Vec cand(t.values.size());
  for (Idx c = 0; c < group.order(); ++c) {
    for (size_t i = 0; i < t.values.size(); ++i)
      cand[i] = group.conjugate(c, t.values[i]);
    if (cand < best) best = cand;
  }
  return SurfaceTuple{t.genus, std::move(best)};
}

namespace {

struct BfsOutcome {
  std::unordered_set<Vec, VecHash> visited;
  std::optional<std::vector<std::string>> witness;
};

// Level-synchronous search over conjugation-canonical forms.  Expansion of a
// level only reads the visited set (a snapshot frozen before the level), so
// the parallel loop is race-free; candidates are then merged serially in
// sorted order, which makes the parent choice -- and hence the witness path
// -- independent of the thread schedule.
BfsOutcome bfs_engine(const FiniteGroup& group, const SurfaceTuple& start,
                      const std::vector<MCGMove>& moves,
                      const std::function<bool(const SurfaceTuple&)>& target,
                      long long budget, bool parallel) {
  validate_hom(group, start);
  if (moves.empty()) throw InputError("orbit search needs at least one move");
  for (const auto& m : moves)
    if (m.genus != start.genus)
      throw InputError("orbit search move genus does not match the start tuple");

  const auto as_tuple = [&](const Vec& v) { return SurfaceTuple{start.genus, v}; };
  const auto out_of_budget = [&]() {
    return BudgetExceeded("orbit search visited more than " +
                          std::to_string(budget) + " states");
  };

  BfsOutcome out;
  const Vec root = canonical_form(group, start).values;
  out.visited.insert(root);
  if (budget < 1) throw out_of_budget();
  if (target && target(as_tuple(root))) {
    out.witness = std::vector<std::string>{};
    return out;
  }

  // child canonical form -> (parent canonical form, move index)
  std::unordered_map<Vec, std::pair<Vec, int>, VecHash> parent;
  const auto witness_to = [&](const Vec& node) {
    std::vector<std::string> names;
    Vec cur = node;
    while (cur != root) {
      const auto& [prev, mi] = parent.at(cur);
      names.push_back(moves[mi].name);
      cur = prev;
    }
    std::reverse(names.begin(), names.end());
    return names;
  };

  struct Cand {
    Vec child;
    long long rank;  // index of the parent in the sorted frontier
    int move;
    bool operator<(const Cand& o) const {
      if (child != o.child) return child < o.child;
      if (rank != o.rank) return rank < o.rank;
      return move < o.move;
    }
  };

  std::vector<Vec> frontier{root};
  const long long move_count = (long long)moves.size();
  while (!frontier.empty()) {
    std::vector<std::vector<Cand>> buffers(thread_slots());
    const long long work = (long long)frontier.size() * move_count;
    // Exceptions must not unwind out of the parallel region; capture the
    // first one and rethrow after the barrier.
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long long k = 0; k < work; ++k) {
      try {
        const long long rank = k / move_count;
        const int mi = (int)(k % move_count);
        SurfaceTuple next = apply_move(group, moves[mi], as_tuple(frontier[rank]));
        Vec c = canonical_form(group, next).values;
        if (!out.visited.count(c))
          buffers[thread_slot()].push_back({std::move(c), rank, mi});
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pants_bfs_failure)
#endif
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Cand> cands;
    for (auto& b : buffers)
      cands.insert(cands.end(), std::make_move_iterator(b.begin()),
                   std::make_move_iterator(b.end()));
    std::sort(cands.begin(), cands.end());

    std::vector<Vec> next;
    for (auto& c : cands) {
      if (!out.visited.insert(c.child).second) continue;
      if ((long long)out.visited.size() > budget) throw out_of_budget();
      parent[c.child] = {frontier[c.rank], c.move};
      if (target && target(as_tuple(c.child))) {
        out.witness = witness_to(c.child);
        return out;
      }
      next.push_back(c.child);
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

OrbitResult orbit_bfs(const FiniteGroup& group, const SurfaceTuple& start,
                      const std::vector<MCGMove>& moves,
                      const std::function<bool(const SurfaceTuple&)>& target,
                      long long budget, bool parallel) {
  BfsOutcome got = bfs_engine(group, start, moves, target, budget, parallel);
  OrbitResult r;
  r.orbit_size = (long long)got.visited.size();
  r.witness = std::move(got.witness);
  return r;
}

OrbitPartition orbit_partition(const FiniteGroup& group,
                               const std::vector<SurfaceTuple>& tuples,
                               const std::vector<MCGMove>& moves,
                               long long budget, bool parallel) {
  OrbitPartition part;
  part.orbit_of.assign(tuples.size(), -1);
  std::unordered_map<Vec, int, VecHash> orbit_of_canon;
  for (size_t i = 0; i < tuples.size(); ++i) {
    Vec canon = canonical_form(group, tuples[i]).values;
    auto it = orbit_of_canon.find(canon);
    if (it != orbit_of_canon.end()) {
      part.orbit_of[i] = it->second;
      continue;
    }
    const int id = part.orbit_count++;
    BfsOutcome got = bfs_engine(group, tuples[i], moves, nullptr, budget, parallel);
    for (const auto& v : got.visited) orbit_of_canon.emplace(v, id);
    part.orbit_of[i] = id;
  }
  return part;
}

CurveWordSystem sausage_words(int genus) {
  if (genus < 2) throw InputError("chain decomposition needs genus at least 2");
  const auto a = [&](int k) { return Word::gen(a_gen(k)); };
  const auto b = [&](int k) { return Word::gen(b_gen(k)); };
  const auto handle = [&](int k) { return commutator(a(k), b(k)); };
  const auto gamma = [&](int k) {
    Word w = Word::one();
    for (int i = k; i <= genus; ++i) w = w * handle(i);
    return w;
  };

  CurveWordSystem sys;
  sys.genus = genus;
  for (int k = 1; k <= genus; ++k) {
    sys.curves.push_back(a(k));
    sys.curve_names.push_back("a" + std::to_string(k));
  }
  for (int k = 2; k <= genus; ++k) {
    sys.curves.push_back(gamma(k));
    sys.curve_names.push_back("gamma" + std::to_string(k));
  }
  for (int k = 2; k <= genus - 1; ++k) {
    sys.curves.push_back(handle(k));
    sys.curve_names.push_back("d" + std::to_string(k));
  }
  for (int k = 1; k <= genus; ++k) {
    sys.pants.push_back(
        {a(k), a(k).inverse().conjugated_by(b(k)), handle(k).inverse()});
    sys.pants_names.push_back("H" + std::to_string(k));
  }
  for (int k = 2; k <= genus - 1; ++k) {
    sys.pants.push_back({gamma(k).inverse(), handle(k), gamma(k + 1)});
    sys.pants_names.push_back("S" + std::to_string(k));
  }
  return sys;
}

CurveWordSystem theta_words() {
  const Word a1 = Word::gen(a_gen(1));
  const Word a2 = Word::gen(a_gen(2));
  CurveWordSystem sys;
  sys.genus = 2;
  sys.curves = {a1, a2, a1 * a2};
  sys.curve_names = {"a1", "a2", "a1a2"};
  sys.pants = {{a1, a2, (a1 * a2).inverse()},
               {a1.inverse(), a2.inverse(), a2 * a1}};
  sys.pants_names = {"T1", "T2"};
  return sys;
}

bool tuple_compatible(const FiniteGroup& group, const SurfaceTuple& t,
                      const CurveWordSystem& system) {
  validate_hom(group, t);
  if (system.genus != t.genus)
    throw InputError("decomposition genus does not match tuple genus");
  for (const Word& c : system.curves) {
    const Idx h = evaluate_word(group, t, c);
    const bool degenerate =
        group.sign_quotient() ? group.is_identity(h) : group.is_central(h);
    if (degenerate) return false;
  }
  for (const auto& triple : system.pants) {
    std::vector<Idx> images;
    for (const Word& w : triple) images.push_back(evaluate_word(group, t, w));
    if (group.is_abelian_subset(images)) return false;
  }
  return true;
}

SurfaceTuple random_relator_tuple(const FiniteGroup& group, int genus,
                                  std::mt19937& rng) {
  if (genus < 1) throw InputError("genus must be at least 1");
  const auto table = commutator_solutions(group);
  std::uniform_int_distribution<int> pick(0, group.order() - 1);
  SurfaceTuple t;
  t.genus = genus;
  t.values.resize(2 * genus);
  Idx prod = group.identity();
  for (int i = 0; i + 1 < genus; ++i) {
    t.values[2 * i] = (Idx)pick(rng);
    t.values[2 * i + 1] = (Idx)pick(rng);
    prod = group.mul(prod, group.commutator(t.values[2 * i], t.values[2 * i + 1]));
  }
  // The prefix product lies in the commutator subgroup, every element of
  // which is a single commutator in the supported groups.
  const auto& sols = table[group.inv(prod)];
  if (sols.empty())
    throw InternalError("commutator equation unexpectedly unsolvable");
  std::uniform_int_distribution<size_t> pick_sol(0, sols.size() - 1);
  const auto [ag, bg] = sols[pick_sol(rng)];
  t.values[2 * genus - 2] = ag;
  t.values[2 * genus - 1] = bg;
  return t;
}

}  // namespace pants
