#pragma once
#include <vector>

#include "pants/graph.hpp"

namespace pants {

// A signed edge of the complex: +1 traverses the edge with its orientation,
// -1 against it.
struct OrientedEdge {
  int edge;
  int sign;
  bool operator==(const OrientedEdge&) const = default;
};

using EdgePath = std::vector<OrientedEdge>;

// Hexagonal CW model of the surface cut along a pants decomposition and
// reglued: the dual graph's edges become curves (two vertices, a top and a
// bottom arc each), its vertices become pants (three seams, two hexagonal
// faces).  Deterministic ids:
//   vertices: P(curve) = 2c, Q(curve) = 2c+1
//   edges:    top arc 2c, bottom arc 2c+1, then seam(pants,j) after all arcs
//   faces:    top(pants) = 2p, bottom(pants) = 2p+1
// The top arc runs P -> Q, the bottom arc Q -> P.  A pants' stub uses its
// curve's forward orientation exactly when the stub is the curve's smaller
// half-edge.  Euler characteristic is 2 - 2*genus by construction, and the
// validator recomputes every invariant.
class PantsCW {
 public:
  static PantsCW build(const TrivalentGraph& graph);

  const TrivalentGraph& graph() const { return graph_; }
  int genus() const { return graph_.genus(); }
  int curve_count() const { return graph_.edge_count(); }
  int pants_count() const { return graph_.vertex_count(); }
  int vertex_count() const { return 2 * curve_count(); }
  int edge_count() const { return 2 * curve_count() + 3 * pants_count(); }
  int face_count() const { return 2 * pants_count(); }
  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }

  int vertex_P(int curve) const;
  int vertex_Q(int curve) const;
  int arc_top(int curve) const;
  int arc_bottom(int curve) const;
  int seam(int pants, int j) const;
  int face_top(int pants) const;
  int face_bottom(int pants) const;

  // Edge classification, inverse to the id scheme above.
  bool edge_is_seam(int e) const;
  int curve_of_arc(int e) const;

  int edge_source(int e) const;
  int edge_target(int e) const;

  // Six signed edges, alternating seam and arc; consecutive edges compose
  // and the path closes.
  const std::vector<OrientedEdge>& face_boundary(int face) const;

  // The curve's free homotopy representative: top arc then bottom arc,
  // based at P(curve).
  EdgePath curve_loop(int curve) const;

  // The three boundary loops of a pants, based at a common vertex; their
  // concatenation L2 L1 L0 is null-homotopic, so any cocycle holonomy
  // multiplies to the identity in that order.
  EdgePath pants_loop(int pants, int k) const;
  int pants_basepoint(int pants) const;

  int basepoint() const { return 0; }

  // Path utilities used by holonomy and the validators.
  int path_start(const EdgePath& p) const;
  int path_end(const EdgePath& p) const;
  bool path_composes(const EdgePath& p) const;
  bool path_closed(const EdgePath& p) const;

 private:
  explicit PantsCW(TrivalentGraph g) : graph_(std::move(g)) {}
  void wire();
  void validate() const;

  TrivalentGraph graph_;
  std::vector<int> src_, dst_;                    // per edge
  std::vector<std::vector<OrientedEdge>> faces_;  // per face, six entries
};

}  // namespace pants
