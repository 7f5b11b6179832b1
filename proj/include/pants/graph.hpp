#pragma once
#include <string>
#include <utility>
#include <vector>

namespace pants {

// Connected trivalent multigraph (loops and parallel edges allowed), the
// dual graph of a pants decomposition.  Half-edge h = 3*vertex + slot with
// slots 0..2; pairing is a fixed-point-free involution on half-edges.
// |V| = 2g-2 and |E| = 3g-3 for the surface genus g = |V|/2 + 1.
class TrivalentGraph {
 public:
  static TrivalentGraph from_pairing(std::vector<int> pairing);

  int vertex_count() const { return (int)pair_.size() / 3; }
  int half_edge_count() const { return (int)pair_.size(); }
  int edge_count() const { return half_edge_count() / 2; }
  int genus() const { return vertex_count() / 2 + 1; }

  const std::vector<int>& pairing() const { return pair_; }
  int pair_of(int h) const;
  static int vertex_of(int h) { return h / 3; }
  static int slot_of(int h) { return h % 3; }

  // Edges sorted by smaller half-edge id; edge e = (h_min, h_max).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_of(int h) const;
  bool edge_is_loop(int e) const;

  // Vertices carrying a one-edge loop, ascending.
  std::vector<int> loop_vertices() const;
  bool has_one_edge_loop() const { return !loop_vertices().empty(); }

  // Isomorphism certificate: the lexicographically minimal flattened
  // adjacency matrix over vertex relabelings (slot order is not part of the
  // abstract graph).  Supported through 16 vertices.
  std::vector<int> canonical_form() const;
  bool isomorphic_to(const TrivalentGraph& o) const;

  std::string str() const;

 private:
  TrivalentGraph() = default;
  std::vector<int> pair_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> edge_of_half_;
};

// Caterpillar dual graph of the handle-by-handle pants decomposition:
// loop vertices for every handle, spine connector vertices between them.
// g = 2 degenerates to the dumbbell.
TrivalentGraph sausage_graph(int g);

// Alternating cycle of 2g-2 vertices with doubled and single sides (the
// flat square family's dual graph); g = 2 degenerates to the theta graph.
TrivalentGraph necklace_graph(int g);

// All connected trivalent multigraphs with at most max_vertices vertices,
// up to isomorphism, in canonical-form order.  max_vertices <= 8.
std::vector<TrivalentGraph> enumerate_trivalent(int max_vertices);

// One step of the graph-cutting procedure.
struct CutStep {
  enum class Kind { RemoveLoopVertex, CutEdge, RemovePants, FinalCut };
  Kind kind;
  int vertex = -1;            // vertex acted on (original labeling)
  std::vector<int> consumed;  // boundary labels consumed by this step
  int created = -1;           // boundary label created (-1 for FinalCut)
};

// The full cutting schedule of a trivalent graph with a one-edge loop:
// remove the loop vertex, cut g-1 edges that do not disconnect, then
// repeatedly remove a pants vertex carrying two boundary labels until only
// the special terminal vertex remains.
struct CuttingSchedule {
  int original_vertices = 0;
  std::vector<CutStep> steps;
};

// Throws NoOneEdgeLoop when the graph has no one-edge loop (the procedure's
// hypothesis).  Every removal step decreases the vertex count and the
// boundary-stub count by exactly one; this is asserted during construction.
CuttingSchedule cutting_schedule(const TrivalentGraph& graph);

// Rebuilds a graph from the schedule by undoing the steps in reverse; the
// result is isomorphic to the graph the schedule was cut from.
TrivalentGraph replay_schedule(const CuttingSchedule& schedule);

}  // namespace pants
