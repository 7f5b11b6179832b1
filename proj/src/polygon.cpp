#include "pants/polygon.hpp"

#include <map>
#include <queue>
#include <set>
#include <string>

#include "pants/errors.hpp"

namespace pants {

GeneratorBridge::PWord GeneratorBridge::inverse(const PWord& w) {
  PWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->id, -it->sign});
  return out;
}

namespace {

void require_internal(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("generator bridge: ") + what);
}

}  // namespace

GeneratorBridge::GeneratorBridge(const PantsCW* cw) : cw_(cw) {
  if (cw_ == nullptr) throw InputError("generator bridge: null complex");
  build();
}

void GeneratorBridge::build() {
  const PantsCW& X = *cw_;
  const int V = X.vertex_count();
  const int E = X.edge_count();

  // Spanning tree of the 1-skeleton by breadth-first search from the
  // basepoint, edges in ascending id order (self-loop edges never qualify).
  tree_.assign(E, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(V);  // (edge, other end)
  for (int e = 0; e < E; ++e) {
    int s = X.edge_source(e), t = X.edge_target(e);
    adj[s].push_back({e, t});
    if (t != s) adj[t].push_back({e, s});
  }
  std::vector<char> seen(V, 0);
  std::queue<int> bfs;
  seen[X.basepoint()] = 1;
  bfs.push(X.basepoint());
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (auto [e, w] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree_[e] = 1;
      ++reached;
      bfs.push(w);
    }
  }
  require_internal(reached == V, "skeleton is disconnected");

  // One letter per non-tree edge.
  letter_of_edge_.assign(E, -1);
  edge_of_letter_.clear();
  for (int e = 0; e < E; ++e) {
    if (tree_[e]) continue;
    letter_of_edge_[e] = (int)edge_of_letter_.size();
    edge_of_letter_.push_back(e);
  }
  letter_count_ = (int)edge_of_letter_.size();
  const int g = X.genus();
  require_internal(letter_count_ == E - V + 1, "letter count mismatch");

  // Face relators over the letters (tree edges contract away).  A reduced
  // pair or an all-tree face would force a free factor in the surface
  // group, so neither can occur.
  auto reduced = [](const PWord& w) {
    const int n = (int)w.size();
    if (n < 2) return true;
    for (int i = 0; i < n; ++i) {
      const auto& a = w[i];
      const auto& b = w[(i + 1) % n];
      if (a.id == b.id && a.sign == -b.sign) return false;
    }
    return true;
  };
  std::vector<PWord> words;
  for (int f = 0; f < X.face_count(); ++f) {
    PWord w;
    for (const auto& oe : X.face_boundary(f)) {
      if (tree_[oe.edge]) continue;
      w.push_back({letter_of_edge_[oe.edge], oe.sign});
    }
    require_internal(!w.empty(), "face contracted to nothing");
    require_internal(reduced(w), "face word not cyclically reduced");
    words.push_back(std::move(w));
  }

  // Merge the relators into one polygon.  Two relators sharing a letter k
  // combine by solving the first for k and substituting into the second;
  // the letter pair disappears and no cancellation can follow (it would
  // erase a letter entirely, splitting off a free factor).
  steps_.clear();
  std::vector<char> alive(words.size(), 1);
  int alive_count = (int)words.size();
  while (alive_count > 1) {
    int wi = -1, wj = -1, k = -1;
    for (size_t i = 0; i < words.size() && wi < 0; ++i) {
      if (!alive[i]) continue;
      std::set<int> mine;
      for (const auto& sl : words[i]) mine.insert(sl.id);
      for (size_t j = i + 1; j < words.size() && wi < 0; ++j) {
        if (!alive[j]) continue;
        int best = -1;
        for (const auto& sl : words[j])
          if (mine.count(sl.id) && (best < 0 || sl.id < best)) best = sl.id;
        if (best >= 0) {
          wi = (int)i;
          wj = (int)j;
          k = best;
        }
      }
    }
    require_internal(wi >= 0, "relators do not share letters");

    PWord& A = words[wi];
    PWord& B = words[wj];
    int p = -1, q = -1;
    for (int i = 0; i < (int)A.size(); ++i)
      if (A[i].id == k) {
        require_internal(p < 0, "shared letter twice in one relator");
        p = i;
      }
    for (int i = 0; i < (int)B.size(); ++i)
      if (B[i].id == k) {
        require_internal(q < 0, "shared letter twice in one relator");
        q = i;
      }
    const int sigma = A[p].sign;
    require_internal(B[q].sign == -sigma, "letter pair with equal signs");

    // Rotate A so the k occurrence is last: A ~ U k^sigma, so
    // k = U^{-sigma}, and the occurrence k^{-sigma} in B is replaced by U.
    PWord U;
    for (int i = 1; i < (int)A.size(); ++i) U.push_back(A[(p + i) % A.size()]);
    PWord merged;
    for (int i = 0; i < q; ++i) merged.push_back(B[i]);
    for (const auto& sl : U) merged.push_back(sl);
    for (int i = q + 1; i < (int)B.size(); ++i) merged.push_back(B[i]);
    require_internal(reduced(merged), "merge produced a cancelling pair");

    Step st;
    st.kind = Step::Kind::Merge;
    st.eliminated = k;
    st.bwd = (sigma > 0) ? inverse(U) : U;
    st.created = -1;
    steps_.push_back(std::move(st));

    words[wi] = std::move(merged);
    alive[wj] = 0;
    --alive_count;
  }
  PWord W;
  for (size_t i = 0; i < words.size(); ++i)
    if (alive[i]) W = std::move(words[i]);

  auto check_chord_word = [&](const PWord& w) {
    std::map<int, std::vector<int>> occ;
    for (int i = 0; i < (int)w.size(); ++i) occ[w[i].id].push_back(i);
    for (const auto& [id, pos] : occ) {
      require_internal(pos.size() == 2, "letter not appearing twice");
      require_internal(w[pos[0]].sign == -w[pos[1]].sign,
                       "letter pair with equal signs");
    }
  };
  require_internal((int)W.size() == 4 * g, "polygon length is not 4g");
  check_chord_word(W);

  // Normalize the polygon to [x1,y1]...[xg,yg].  Finished commutator
  // blocks stay in place (every move keeps them contiguous); each round
  // either recognizes a block in place or extracts one with four
  // cut-and-glue moves on a linked pair.
  std::vector<char> finished(letter_count_, 0);
  auto unfinished_total = [&]() {
    int n = 0;
    for (const auto& sl : W)
      if (!finished[sl.id]) ++n;
    return n / 2;
  };

  while (unfinished_total() > 0) {
    const int L = (int)W.size();

    // A commutator block already in place: p q p^-1 q^-1 consecutively.
    bool found = false;
    for (int i = 0; i < L && !found; ++i) {
      const auto& p = W[i];
      const auto& q = W[(i + 1) % L];
      const auto& r = W[(i + 2) % L];
      const auto& s = W[(i + 3) % L];
      if (p.id == q.id || finished[p.id] || finished[q.id]) continue;
      if (r.id == p.id && r.sign == -p.sign && s.id == q.id &&
          s.sign == -q.sign) {
        finished[p.id] = finished[q.id] = 1;
        found = true;
      }
    }
    if (found) continue;

    // Smallest unfinished letter, then the smallest unfinished letter
    // linked with it (one occurrence strictly between its two).
    int x0 = -1;
    for (const auto& sl : W)
      if (!finished[sl.id] && (x0 < 0 || sl.id < x0)) x0 = sl.id;
    std::vector<int> xpos;
    for (int i = 0; i < L; ++i)
      if (W[i].id == x0) xpos.push_back(i);
    require_internal(xpos.size() == 2, "chord occurrence count");
    const int p1 = xpos[0], p2 = xpos[1];
    auto rel = [&](int pos) { return (pos - p1 + L) % L; };
    int y0 = -1;
    for (const auto& sl : W) {
      if (finished[sl.id] || sl.id == x0) continue;
      std::vector<int> ypos;
      for (int i = 0; i < L; ++i)
        if (W[i].id == sl.id) ypos.push_back(i);
      const bool in1 = rel(ypos[0]) < rel(p2);
      const bool in2 = rel(ypos[1]) < rel(p2);
      if (in1 != in2 && (y0 < 0 || sl.id < y0)) y0 = sl.id;
    }
    require_internal(y0 >= 0, "no linked partner for a chord");

    // Rotate so the word reads  x^a A y^b B x^-a C y^-b D  linearly.
    PWord R(L);
    for (int i = 0; i < L; ++i) R[i] = W[(p1 + i) % L];
    const int px2 = rel(p2);
    int py = -1, py2 = -1;
    for (int i = 1; i < L; ++i)
      if (R[i].id == y0) (i < px2 ? py : py2) = i;
    require_internal(py > 0 && py2 > px2, "linked pair arrangement");
    const int a = R[0].sign;
    const int b = R[py].sign;
    require_internal(R[px2].sign == -a && R[py2].sign == -b,
                     "pair signs not opposite");
    const PWord A(R.begin() + 1, R.begin() + py);
    const PWord B(R.begin() + py + 1, R.begin() + px2);
    const PWord C(R.begin() + px2 + 1, R.begin() + py2);
    const PWord D(R.begin() + py2 + 1, R.end());

    auto cat = [](std::initializer_list<const PWord*> parts) {
      PWord out;
      for (const PWord* p : parts)
        out.insert(out.end(), p->begin(), p->end());
      return out;
    };
    auto lift_sign = [](const PWord& w, int s) {
      return s > 0 ? w : inverse(w);
    };

    // Four tracked cut-and-glue moves extract the handle; each records the
    // fresh letter's definition over pre-move letters and the eliminated
    // letter's expression over post-move letters.  The word evolves
    //   x^a A y^b B x^-a C y^-b D
    //   -> A y^b B c D C y^-b c^-1          (I:   kills x, creates c)
    //   -> B c d c^-1 A d^-1 D C            (II:  kills y, creates d)
    //   -> e B A d^-1 D C e^-1 d            (III: kills c, creates e)
    //   -> B A f d f^-1 d^-1 D C            (IV:  kills e, creates f)
    // leaving the finished block [f, d].
    const int c = letter_count_++;
    const int d = letter_count_++;
    const int e = letter_count_++;
    const int f = letter_count_++;
    finished.resize(letter_count_, 0);

    const PWord xm{{x0, -a}}, ym{{y0, -b}};
    const PWord cp{{c, 1}}, cm{{c, -1}};
    const PWord dp{{d, 1}}, dm{{d, -1}};
    const PWord em{{e, -1}};
    const PWord fm{{f, -1}};
    const PWord Ai = inverse(A), Bi = inverse(B), Di = inverse(D);

    Step s1;  // c := x^-a C y^-b ; x^a = D^-1 c^-1 B^-1 y^-b A^-1
    s1.kind = Step::Kind::CutGlue;
    s1.created = c;
    s1.fwd = cat({&xm, &C, &ym});
    s1.eliminated = x0;
    s1.bwd = lift_sign(cat({&Di, &cm, &Bi, &ym, &Ai}), a);
    steps_.push_back(std::move(s1));

    Step s2;  // d := D C y^-b c^-1 A ; y^b = d^-1 c^-1 B^-1
    s2.kind = Step::Kind::CutGlue;
    s2.created = d;
    s2.fwd = cat({&D, &C, &ym, &cm, &A});
    s2.eliminated = y0;
    s2.bwd = lift_sign(cat({&dm, &cm, &Bi}), b);
    steps_.push_back(std::move(s2));

    Step s3;  // e := d c^-1 A d^-1 D C ; c = B^-1 e^-1
    s3.kind = Step::Kind::CutGlue;
    s3.created = e;
    s3.fwd = cat({&dp, &cm, &A, &dm, &D, &C});
    s3.eliminated = c;
    s3.bwd = cat({&Bi, &em});
    steps_.push_back(std::move(s3));

    Step s4;  // f := d^-1 D C e^-1 d ; e = f^-1 A^-1 B^-1
    s4.kind = Step::Kind::CutGlue;
    s4.created = f;
    s4.fwd = cat({&dm, &D, &C, &em, &dp});
    s4.eliminated = e;
    s4.bwd = cat({&fm, &Ai, &Bi});
    steps_.push_back(std::move(s4));

    const PWord fp{{f, 1}};
    W = cat({&B, &A, &fp, &dp, &fm, &dm, &D, &C});
    require_internal((int)W.size() == L, "move changed the polygon length");
    check_chord_word(W);
    finished[f] = finished[d] = 1;
  }

  // Read the normal form: some rotation splits the polygon into g
  // consecutive commutator blocks.
  const int L = (int)W.size();
  final_letters_.clear();
  for (int rot = 0; rot < L && final_letters_.empty(); ++rot) {
    std::vector<SignedLetter> read;
    bool ok = true;
    for (int h = 0; h < g && ok; ++h) {
      const auto& p = W[(rot + 4 * h) % L];
      const auto& q = W[(rot + 4 * h + 1) % L];
      const auto& r = W[(rot + 4 * h + 2) % L];
      const auto& s = W[(rot + 4 * h + 3) % L];
      ok = p.id != q.id && r.id == p.id && r.sign == -p.sign &&
           s.id == q.id && s.sign == -q.sign;
      if (ok) {
        read.push_back(p);
        read.push_back(q);
      }
    }
    if (ok) final_letters_ = std::move(read);
  }
  require_internal((int)final_letters_.size() == 2 * g,
                   "polygon did not reach the standard form");
}

std::vector<FiniteGroup::Index> GeneratorBridge::tuple_of(
    const Cocycle& c) const {
  if (&c.cw() != cw_)
    throw InputError("generator bridge: cocycle lives on another complex");
  const PantsCW& X = *cw_;
  const FiniteGroup& G = c.group();

  // Tree potentials: holonomy of the tree path from the basepoint.
  const int V = X.vertex_count();
  std::vector<FiniteGroup::Index> pot(V, G.identity());
  std::vector<char> seen(V, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(V);
  for (int e = 0; e < (int)tree_.size(); ++e) {
    if (!tree_[e]) continue;
    adj[X.edge_source(e)].push_back({e, +1});
    adj[X.edge_target(e)].push_back({e, -1});
  }
  std::queue<int> bfs;
  seen[X.basepoint()] = 1;
  bfs.push(X.basepoint());
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (auto [e, dir] : adj[v]) {
      int w = dir > 0 ? X.edge_target(e) : X.edge_source(e);
      if (seen[w]) continue;
      seen[w] = 1;
      pot[w] = G.mul(pot[v], c.value(e, dir));
      bfs.push(w);
    }
  }

  // Letter values: based-loop holonomies of the non-tree edges, then the
  // recorded definitions of every fresh letter in creation order.
  std::vector<FiniteGroup::Index> val(letter_count_, G.identity());
  std::vector<char> have(letter_count_, 0);
  for (int ell = 0; ell < (int)edge_of_letter_.size(); ++ell) {
    const int e = edge_of_letter_[ell];
    val[ell] = G.mul(G.mul(pot[X.edge_source(e)], c.value(e, +1)),
                     G.inv(pot[X.edge_target(e)]));
    have[ell] = 1;
  }
  auto eval = [&](const PWord& w) {
    FiniteGroup::Index r = G.identity();
    for (const auto& sl : w) {
      require_internal(have[sl.id], "evaluation before definition");
      r = G.mul(r, sl.sign > 0 ? val[sl.id] : G.inv(val[sl.id]));
    }
    return r;
  };
  for (const auto& st : steps_) {
    if (st.kind != Step::Kind::CutGlue) continue;
    val[st.created] = eval(st.fwd);
    have[st.created] = 1;
  }

  std::vector<FiniteGroup::Index> out;
  for (const auto& sl : final_letters_)
    out.push_back(sl.sign > 0 ? val[sl.id] : G.inv(val[sl.id]));

  FiniteGroup::Index rel = G.identity();
  for (size_t h = 0; 2 * h + 1 < out.size(); ++h)
    rel = G.mul(rel, G.commutator(out[2 * h], out[2 * h + 1]));
  require_internal(G.is_identity(rel), "tuple violates the surface relator");
  return out;
}

Cocycle GeneratorBridge::cocycle_of(
    const FiniteGroup& group,
    const std::vector<FiniteGroup::Index>& tuple) const {
  const PantsCW& X = *cw_;
  const int g = X.genus();
  if ((int)tuple.size() != 2 * g)
    throw InputError("generator bridge: tuple must have 2*genus entries");
  for (auto v : tuple)
    if (v >= group.order())
      throw InputError("generator bridge: tuple entry out of range");
  FiniteGroup::Index rel = group.identity();
  for (int h = 0; h < g; ++h)
    rel = group.mul(rel, group.commutator(tuple[2 * h], tuple[2 * h + 1]));
  if (!group.is_identity(rel))
    throw InputError(
        "generator bridge: tuple does not satisfy the surface relation");

  std::vector<FiniteGroup::Index> val(letter_count_, group.identity());
  std::vector<char> have(letter_count_, 0);
  for (int i = 0; i < 2 * g; ++i) {
    const auto& sl = final_letters_[i];
    val[sl.id] = sl.sign > 0 ? tuple[i] : group.inv(tuple[i]);
    have[sl.id] = 1;
  }
  auto eval = [&](const PWord& w) {
    FiniteGroup::Index r = group.identity();
    for (const auto& sl : w) {
      require_internal(have[sl.id], "evaluation before definition");
      r = group.mul(r, sl.sign > 0 ? val[sl.id] : group.inv(val[sl.id]));
    }
    return r;
  };
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    val[it->eliminated] = eval(it->bwd);
    have[it->eliminated] = 1;
  }
  for (int ell = 0; ell < (int)edge_of_letter_.size(); ++ell)
    require_internal(have[ell], "original letter left unassigned");

  std::vector<FiniteGroup::Index> edge_values(X.edge_count(),
                                              group.identity());
  for (int e = 0; e < X.edge_count(); ++e)
    if (letter_of_edge_[e] >= 0) edge_values[e] = val[letter_of_edge_[e]];
  try {
    return Cocycle(cw_, &group, std::move(edge_values));
  } catch (const InputError& err) {
    throw InternalError(std::string("generator bridge: produced edge values "
                                    "rejected by the face check: ") +
                        err.what());
  }
}

}  // namespace pants
