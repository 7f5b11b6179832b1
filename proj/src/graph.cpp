#include "pants/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pants/errors.hpp"

namespace pants {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix adjacency_from_pairing(const std::vector<int>& pair) {
  int n = (int)pair.size() / 3;
  Matrix a(n, std::vector<int>(n, 0));
  for (int h = 0; h < (int)pair.size(); ++h) {
    int p = pair[h];
    if (h < p) {
      int v = h / 3, w = p / 3;
      if (v == w) {
        a[v][v] += 2;  // a loop contributes two to the degree
      } else {
        a[v][w] += 1;
        a[w][v] += 1;
      }
    }
  }
  return a;
}

// Iterated neighborhood refinement: colors stabilize to an isomorphism-
// invariant vertex partition, used to restrict the relabeling search.
std::vector<int> refine_colors(const Matrix& a) {
  int n = (int)a.size();
  std::vector<int> color(n, 0);
  for (int round = 0; round <= n; ++round) {
    // Signature: own color, loop count, multiset of (neighbor color, mult).
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < n; ++w) {
        if (w != v && a[v][w] > 0) nb.push_back({color[w], a[v][w]});
      }
      std::sort(nb.begin(), nb.end());
      sig[v] = {color[v], a[v][v]};
      for (auto& p : nb) {
        sig[v].push_back(p.first);
        sig[v].push_back(p.second);
      }
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = ids[sig[v]];
    if (fresh == color) break;
    color = fresh;
  }
  return color;
}

// The certificate is the lexicographically minimal lower-triangle sequence
// (rows 0..n-1, each row listing a[i][0..i]) over cell-respecting vertex
// relabelings.  Appending one row at a time permits exact lex pruning:
// once the prefix ties the best, any larger entry cuts the branch.
struct CanonSearch {
  const Matrix& a;
  const std::vector<int>& pos_color;              // color required per position
  const std::vector<std::vector<int>>& members;   // vertices of each color
  std::vector<int> order;
  std::vector<char> used;
  std::vector<int> cur, best;

  CanonSearch(const Matrix& m, const std::vector<int>& pc,
              const std::vector<std::vector<int>>& mem)
      : a(m), pos_color(pc), members(mem), used(m.size(), 0) {}

  void go(size_t pos, bool strictly_less) {
    if (pos == a.size()) {
      // Full compare: the strictly_less flag can be stale once best has
      // been replaced further down the tree, so it only guides pruning.
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (int v : members[pos_color[pos]]) {
      if (used[v]) continue;
      size_t save = cur.size();
      bool viable = true, sl = strictly_less;
      for (size_t j = 0; j <= pos && viable; ++j) {
        int val = (j == pos) ? a[v][v] : a[v][order[j]];
        cur.push_back(val);
        if (!sl && !best.empty()) {
          int bval = best[cur.size() - 1];
          if (val > bval)
            viable = false;
          else if (val < bval)
            sl = true;
        }
      }
      if (viable) {
        used[v] = 1;
        order.push_back(v);
        go(pos + 1, sl);
        order.pop_back();
        used[v] = 0;
      }
      cur.resize(save);
    }
  }
};

std::vector<int> canonical_matrix(const Matrix& a) {
  int n = (int)a.size();
  std::vector<int> color = refine_colors(a);
  int ncolors = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> members(ncolors);
  for (int v = 0; v < n; ++v) members[color[v]].push_back(v);
  std::vector<int> pos_color;
  for (int c = 0; c < ncolors; ++c)
    pos_color.insert(pos_color.end(), members[c].size(), c);
  CanonSearch search(a, pos_color, members);
  search.order.reserve(n);
  search.go(0, false);
  search.best.insert(search.best.begin(), n);
  return search.best;
}

Matrix matrix_from_canonical(const std::vector<int>& c) {
  int n = c[0];
  Matrix a(n, std::vector<int>(n, 0));
  size_t k = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a[i][j] = a[j][i] = c[k++];
  return a;
}

}  // namespace

TrivalentGraph TrivalentGraph::from_pairing(std::vector<int> pairing) {
  if (pairing.empty() || pairing.size() % 6 != 0)
    throw InputError("trivalent graph needs a positive even vertex count");
  int hn = (int)pairing.size();
  for (int h = 0; h < hn; ++h) {
    int p = pairing[h];
    if (p < 0 || p >= hn)
      throw InputError("half-edge pairing target out of range");
    if (p == h) throw InputError("half-edge paired with itself");
    if (pairing[p] != h) throw InputError("half-edge pairing is not an involution");
  }
  // Connectivity over vertices through edges.
  int n = hn / 3;
  std::vector<char> seen(n, 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int s = 0; s < 3; ++s) {
      int w = pairing[3 * v + s] / 3;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InputError("trivalent graph is not connected");

  TrivalentGraph g;
  g.pair_ = std::move(pairing);
  g.edge_of_half_.assign(hn, -1);
  for (int h = 0; h < hn; ++h) {
    if (h < g.pair_[h]) {
      g.edge_of_half_[h] = (int)g.edges_.size();
      g.edge_of_half_[g.pair_[h]] = (int)g.edges_.size();
      g.edges_.push_back({h, g.pair_[h]});
    }
  }
  return g;
}

int TrivalentGraph::pair_of(int h) const {
  if (h < 0 || h >= (int)pair_.size()) throw InputError("half-edge out of range");
  return pair_[h];
}

int TrivalentGraph::edge_of(int h) const {
  if (h < 0 || h >= (int)pair_.size()) throw InputError("half-edge out of range");
  return edge_of_half_[h];
}

bool TrivalentGraph::edge_is_loop(int e) const {
  if (e < 0 || e >= (int)edges_.size()) throw InputError("edge index out of range");
  return edges_[e].first / 3 == edges_[e].second / 3;
}

std::vector<int> TrivalentGraph::loop_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    for (int s = 0; s < 3; ++s) {
      if (pair_[3 * v + s] / 3 == v) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::vector<int> TrivalentGraph::canonical_form() const {
  if (vertex_count() > 16)
    throw UnsupportedCombination(
        "canonical form is supported through 16 vertices (48 half-edges)");
  return canonical_matrix(adjacency_from_pairing(pair_));
}

bool TrivalentGraph::isomorphic_to(const TrivalentGraph& o) const {
  if (vertex_count() != o.vertex_count()) return false;
  return canonical_form() == o.canonical_form();
}

std::string TrivalentGraph::str() const {
  std::ostringstream os;
  os << "graph(v=" << vertex_count() << ", genus=" << genus() << ", edges=";
  for (size_t e = 0; e < edges_.size(); ++e) {
    if (e) os << " ";
    os << edges_[e].first / 3 << "-" << edges_[e].second / 3;
  }
  os << ")";
  return os.str();
}

TrivalentGraph sausage_graph(int g) {
  if (g < 2) throw InputError("sausage graph needs genus >= 2");
  auto glue = [](std::vector<int>& p, int x, int y) {
    p[x] = y;
    p[y] = x;
  };
  if (g == 2) {
    std::vector<int> p(6);
    glue(p, 0, 1);  // loop at handle vertex 0
    glue(p, 3, 4);  // loop at handle vertex 1
    glue(p, 2, 5);  // connector
    return TrivalentGraph::from_pairing(p);
  }
  // Handle vertices 0..g-1 (slots 0,1 loop), spine vertices g..2g-3.
  int n = 2 * g - 2;
  std::vector<int> p(3 * n, -1);
  auto spine = [&](int k) { return g + (k - 2); };  // k = 2..g-1
  for (int k = 1; k <= g; ++k) glue(p, 3 * (k - 1), 3 * (k - 1) + 1);
  glue(p, 3 * 0 + 2, 3 * spine(2) + 0);                // first handle to spine
  glue(p, 3 * (g - 1) + 2, 3 * spine(g - 1) + 2);      // last handle to spine
  for (int k = 2; k <= g - 1; ++k)
    glue(p, 3 * (k - 1) + 2, 3 * spine(k) + 1);        // middle handle drop
  for (int k = 2; k <= g - 2; ++k)
    glue(p, 3 * spine(k) + 2, 3 * spine(k + 1) + 0);   // spine run
  return TrivalentGraph::from_pairing(p);
}

TrivalentGraph necklace_graph(int g) {
  if (g < 2) throw InputError("necklace graph needs genus >= 2");
  int n = 2 * g - 2;
  std::vector<int> p(3 * n, -1);
  auto glue = [&](int x, int y) {
    p[x] = y;
    p[y] = x;
  };
  if (g == 2) {
    for (int s = 0; s < 3; ++s) glue(3 * 0 + s, 3 * 1 + s);  // theta
    return TrivalentGraph::from_pairing(p);
  }
  for (int t = 0; 2 * t < n; ++t) {
    glue(3 * (2 * t) + 0, 3 * (2 * t + 1) + 0);  // doubled side
    glue(3 * (2 * t) + 1, 3 * (2 * t + 1) + 1);
    glue(3 * (2 * t + 1) + 2, 3 * ((2 * t + 2) % n) + 2);  // single side
  }
  return TrivalentGraph::from_pairing(p);
}

namespace {

// Builds the deterministic half-edge pairing of an adjacency matrix: loops
// first, then neighbor stubs ascending.
std::vector<int> pairing_from_matrix(const Matrix& a) {
  int n = (int)a.size();
  std::vector<int> next_slot(n, 0);
  std::vector<int> p(3 * n, -1);
  auto take = [&](int v) { return 3 * v + next_slot[v]++; };
  for (int v = 0; v < n; ++v) {
    for (int l = 0; l < a[v][v] / 2; ++l) {
      int x = take(v), y = take(v);
      p[x] = y;
      p[y] = x;
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      for (int m = 0; m < a[v][w]; ++m) {
        int x = take(v), y = take(w);
        p[x] = y;
        p[y] = x;
      }
    }
  }
  return p;
}

bool matrix_connected(const Matrix& a) {
  int n = (int)a.size();
  std::vector<char> seen(n, 0);
  std::vector<int> st = {0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w = 0; w < n; ++w) {
      if (w != v && a[v][w] > 0 && !seen[w]) {
        seen[w] = 1;
        ++cnt;
        st.push_back(w);
      }
    }
  }
  return cnt == n;
}

void fill_row(Matrix& a, int i, int j, std::vector<int>& rem,
              std::vector<std::vector<int>>& out) {
  int n = (int)a.size();
  if (i == n) {
    if (matrix_connected(a)) out.push_back(canonical_matrix(a));
    return;
  }
  if (j == n) {
    if (rem[i] == 0) fill_row(a, i + 1, i + 1, rem, out);
    return;
  }
  if (i == j) {
    for (int loops = 0; 2 * loops <= rem[i]; ++loops) {
      a[i][i] = 2 * loops;
      rem[i] -= 2 * loops;
      fill_row(a, i, j + 1, rem, out);
      rem[i] += 2 * loops;
    }
    a[i][i] = 0;
    return;
  }
  int cap = std::min(rem[i], rem[j]);
  for (int m = 0; m <= cap; ++m) {
    a[i][j] = a[j][i] = m;
    rem[i] -= m;
    rem[j] -= m;
    fill_row(a, i, j + 1, rem, out);
    rem[i] += m;
    rem[j] += m;
  }
  a[i][j] = a[j][i] = 0;
}

}  // namespace

std::vector<TrivalentGraph> enumerate_trivalent(int max_vertices) {
  if (max_vertices < 0 || max_vertices > 8)
    throw InputError("trivalent enumeration is supported through 8 vertices");
  std::set<std::vector<int>> canon;
  for (int n = 2; n <= max_vertices; n += 2) {
    Matrix a(n, std::vector<int>(n, 0));
    std::vector<int> rem(n, 3);
    std::vector<std::vector<int>> found;
    fill_row(a, 0, 0, rem, found);
    canon.insert(found.begin(), found.end());
  }
  std::vector<TrivalentGraph> out;
  for (const auto& c : canon)
    out.push_back(
        TrivalentGraph::from_pairing(pairing_from_matrix(matrix_from_canonical(c))));
  return out;
}

namespace {

// Working state for schedule construction: original half-edge ids with a
// partial matching and boundary labels on freed stubs.
struct CutState {
  std::vector<int> match;   // partner half-edge or -1
  std::vector<int> label;   // boundary label or -1
  std::vector<char> alive;  // per vertex
  int vertices = 0;
  int stubs = 0;  // boundary components of the cut-open surface

  int degree(int v) const {
    int d = 0;
    for (int s = 0; s < 3; ++s)
      if (match[3 * v + s] >= 0) ++d;
    return d;
  }
};

}  // namespace

CuttingSchedule cutting_schedule(const TrivalentGraph& graph) {
  std::vector<int> loops = graph.loop_vertices();
  if (loops.empty())
    throw NoOneEdgeLoop("graph has no one-edge loop; cutting needs one");
  int g = graph.genus();
  CutState st;
  st.match = graph.pairing();
  st.label.assign(st.match.size(), -1);
  st.alive.assign(graph.vertex_count(), 1);
  st.vertices = graph.vertex_count();
  st.stubs = 0;

  CuttingSchedule sched;
  sched.original_vertices = graph.vertex_count();
  int next_label = 0;

  // Step 1: remove the smallest loop vertex together with its loop and its
  // connector edge; the connector's far stub becomes the first boundary.
  int v = loops[0];
  int connector_slot = -1;
  for (int s = 0; s < 3; ++s)
    if (st.match[3 * v + s] / 3 != v) connector_slot = s;
  if (connector_slot < 0)
    throw InternalError("loop vertex without connector stub");
  int far = st.match[3 * v + connector_slot];
  int u = far / 3;  // the terminal vertex of the whole procedure
  for (int s = 0; s < 3; ++s) st.match[3 * v + s] = -1;
  st.match[far] = -1;
  st.label[far] = next_label;
  st.alive[v] = 0;
  st.vertices -= 1;
  st.stubs += 1;
  sched.steps.push_back({CutStep::Kind::RemoveLoopVertex, v, {}, next_label++});

  // Step 2: cut the complement of a spanning tree (g-1 edges); removing
  // non-tree edges never disconnects.
  {
    std::vector<int> parent_edge(graph.vertex_count(), -1);
    std::vector<char> seen(graph.vertex_count(), 0);
    std::vector<char> tree_edge(graph.edge_count(), 0);
    int root = -1;
    for (int w = 0; w < graph.vertex_count(); ++w)
      if (st.alive[w]) {
        root = w;
        break;
      }
    std::vector<int> queue = {root};
    seen[root] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int s = 0; s < 3; ++s) {
        int h = 3 * x + s;
        if (st.match[h] < 0) continue;
        int y = st.match[h] / 3;
        if (!seen[y]) {
          seen[y] = 1;
          tree_edge[graph.edge_of(h)] = 1;
          queue.push_back(y);
        }
      }
    }
    int cut_count = 0;
    for (int e = 0; e < graph.edge_count(); ++e) {
      auto [h1, h2] = graph.edges()[e];
      if (st.match[h1] != h2) continue;  // already removed with v
      if (tree_edge[e]) continue;
      st.match[h1] = -1;
      st.match[h2] = -1;
      st.label[h1] = next_label;
      st.label[h2] = next_label;
      st.stubs += 2;
      sched.steps.push_back({CutStep::Kind::CutEdge, h1 / 3, {}, next_label++});
      ++cut_count;
    }
    if (cut_count != g - 1)
      throw InternalError("cut count does not match genus - 1");
  }

  // Step 3: repeatedly remove a tree leaf other than the terminal vertex;
  // it carries exactly two boundary labels and one tree edge.
  while (st.vertices > 1) {
    int f = -1;
    for (int w = 0; w < graph.vertex_count(); ++w) {
      if (st.alive[w] && w != u && st.degree(w) == 1) {
        f = w;
        break;
      }
    }
    if (f < 0) throw InternalError("no removable pants leaf found");
    std::vector<int> consumed;
    int tree_half = -1;
    for (int s = 0; s < 3; ++s) {
      int h = 3 * f + s;
      if (st.match[h] >= 0)
        tree_half = h;
      else
        consumed.push_back(st.label[h]);
    }
    if ((int)consumed.size() != 2 || consumed[0] < 0 || consumed[1] < 0)
      throw InternalError("pants leaf does not carry two boundary labels");
    int other = st.match[tree_half];
    st.match[tree_half] = -1;
    st.match[other] = -1;
    st.label[other] = next_label;
    st.alive[f] = 0;
    int before_v = st.vertices, before_b = st.stubs;
    st.vertices -= 1;
    st.stubs -= 1;  // two labels consumed, one created
    if (st.vertices != before_v - 1 || st.stubs != before_b - 1)
      throw InternalError("pants removal did not decrease counts by one");
    sched.steps.push_back({CutStep::Kind::RemovePants, f, consumed, next_label++});
  }

  // Step 4: the terminal vertex carries all remaining boundary labels.
  {
    if (!st.alive[u]) throw InternalError("terminal vertex was removed early");
    std::vector<int> consumed;
    for (int s = 0; s < 3; ++s) {
      int h = 3 * u + s;
      if (st.match[h] >= 0 || st.label[h] < 0)
        throw InternalError("terminal vertex still has matched stubs");
      consumed.push_back(st.label[h]);
    }
    if (st.stubs != 3)
      throw InternalError("terminal boundary count is not three");
    sched.steps.push_back({CutStep::Kind::FinalCut, u, consumed, -1});
  }
  return sched;
}

TrivalentGraph replay_schedule(const CuttingSchedule& schedule) {
  std::vector<int> match;  // grows three slots per created vertex
  std::vector<int> label;
  auto new_vertex = [&]() {
    int v = (int)match.size() / 3;
    match.insert(match.end(), {-1, -1, -1});
    label.insert(label.end(), {-1, -1, -1});
    return v;
  };
  auto stubs_with = [&](int l) {
    std::vector<int> hs;
    for (int h = 0; h < (int)label.size(); ++h)
      if (label[h] == l) hs.push_back(h);
    return hs;
  };
  auto glue = [&](int x, int y) {
    match[x] = y;
    match[y] = x;
    label[x] = label[y] = -1;
  };

  for (auto it = schedule.steps.rbegin(); it != schedule.steps.rend(); ++it) {
    const CutStep& step = *it;
    switch (step.kind) {
      case CutStep::Kind::FinalCut: {
        int v = new_vertex();
        if (step.consumed.size() != 3)
          throw InputError("terminal step must carry three labels");
        for (int s = 0; s < 3; ++s) label[3 * v + s] = step.consumed[s];
        break;
      }
      case CutStep::Kind::RemovePants: {
        auto hs = stubs_with(step.created);
        if (hs.size() != 1)
          throw InputError("pants step label is not on exactly one stub");
        if (step.consumed.size() != 2)
          throw InputError("pants step must consume two labels");
        int v = new_vertex();
        glue(3 * v + 0, hs[0]);
        label[3 * v + 1] = step.consumed[0];
        label[3 * v + 2] = step.consumed[1];
        break;
      }
      case CutStep::Kind::CutEdge: {
        auto hs = stubs_with(step.created);
        if (hs.size() != 2)
          throw InputError("cut-edge label is not on exactly two stubs");
        glue(hs[0], hs[1]);
        break;
      }
      case CutStep::Kind::RemoveLoopVertex: {
        auto hs = stubs_with(step.created);
        if (hs.size() != 1)
          throw InputError("loop-vertex label is not on exactly one stub");
        int v = new_vertex();
        glue(3 * v + 0, hs[0]);
        glue(3 * v + 1, 3 * v + 2);
        break;
      }
    }
  }
  for (int h = 0; h < (int)label.size(); ++h)
    if (label[h] >= 0) throw InputError("replay left unmatched boundary labels");
  return TrivalentGraph::from_pairing(match);
}

}  // namespace pants
