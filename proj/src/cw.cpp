#include "pants/cw.hpp"

#include "pants/errors.hpp"

namespace pants {

namespace {
// Orientation sign a pants stub induces on its curve's arcs: forward exactly
// at the curve's smaller half-edge.
int stub_sign(const TrivalentGraph& g, int h) { return h < g.pair_of(h) ? 1 : -1; }
}  // namespace

PantsCW PantsCW::build(const TrivalentGraph& graph) {
  if (graph.genus() > 25)
    throw InputError("pants complexes are supported through genus 25");
  PantsCW cw(graph);
  cw.wire();
  cw.validate();
  return cw;
}

int PantsCW::vertex_P(int curve) const {
  if (curve < 0 || curve >= curve_count()) throw InputError("curve out of range");
  return 2 * curve;
}
int PantsCW::vertex_Q(int curve) const { return vertex_P(curve) + 1; }
int PantsCW::arc_top(int curve) const {
  if (curve < 0 || curve >= curve_count()) throw InputError("curve out of range");
  return 2 * curve;
}
int PantsCW::arc_bottom(int curve) const { return arc_top(curve) + 1; }
int PantsCW::seam(int pants, int j) const {
  if (pants < 0 || pants >= pants_count() || j < 0 || j > 2)
    throw InputError("seam index out of range");
  return 2 * curve_count() + 3 * pants + j;
}
int PantsCW::face_top(int pants) const {
  if (pants < 0 || pants >= pants_count()) throw InputError("pants out of range");
  return 2 * pants;
}
int PantsCW::face_bottom(int pants) const { return face_top(pants) + 1; }

bool PantsCW::edge_is_seam(int e) const {
  if (e < 0 || e >= edge_count()) throw InputError("edge out of range");
  return e >= 2 * curve_count();
}
int PantsCW::curve_of_arc(int e) const {
  if (edge_is_seam(e)) throw InputError("edge is a seam, not an arc");
  return e / 2;
}

int PantsCW::edge_source(int e) const {
  if (e < 0 || e >= edge_count()) throw InputError("edge out of range");
  return src_[e];
}
int PantsCW::edge_target(int e) const {
  if (e < 0 || e >= edge_count()) throw InputError("edge out of range");
  return dst_[e];
}

const std::vector<OrientedEdge>& PantsCW::face_boundary(int face) const {
  if (face < 0 || face >= face_count()) throw InputError("face out of range");
  return faces_[face];
}

void PantsCW::wire() {
  src_.assign(edge_count(), -1);
  dst_.assign(edge_count(), -1);
  for (int c = 0; c < curve_count(); ++c) {
    src_[arc_top(c)] = vertex_P(c);
    dst_[arc_top(c)] = vertex_Q(c);
    src_[arc_bottom(c)] = vertex_Q(c);
    dst_[arc_bottom(c)] = vertex_P(c);
  }
  faces_.assign(face_count(), {});
  for (int p = 0; p < pants_count(); ++p) {
    int curve[3], e[3], u[3], v[3];
    for (int j = 0; j < 3; ++j) {
      int h = 3 * p + j;
      curve[j] = graph_.edge_of(h);
      e[j] = stub_sign(graph_, h);
      u[j] = e[j] > 0 ? vertex_P(curve[j]) : vertex_Q(curve[j]);
      v[j] = e[j] > 0 ? vertex_Q(curve[j]) : vertex_P(curve[j]);
    }
    // Seams connect consecutive arc ends: s1: v0->u1, s2: v1->u2, s0: v2->u0.
    src_[seam(p, 1)] = v[0];
    dst_[seam(p, 1)] = u[1];
    src_[seam(p, 2)] = v[1];
    dst_[seam(p, 2)] = u[2];
    src_[seam(p, 0)] = v[2];
    dst_[seam(p, 0)] = u[0];
    faces_[face_top(p)] = {
        {seam(p, 0), 1}, {arc_top(curve[0]), e[0]},
        {seam(p, 1), 1}, {arc_top(curve[1]), e[1]},
        {seam(p, 2), 1}, {arc_top(curve[2]), e[2]},
    };
    faces_[face_bottom(p)] = {
        {seam(p, 0), -1}, {arc_bottom(curve[2]), e[2]},
        {seam(p, 2), -1}, {arc_bottom(curve[1]), e[1]},
        {seam(p, 1), -1}, {arc_bottom(curve[0]), e[0]},
    };
  }
}

int PantsCW::path_start(const EdgePath& p) const {
  if (p.empty()) throw InputError("empty path has no start");
  return p.front().sign > 0 ? src_[p.front().edge] : dst_[p.front().edge];
}
int PantsCW::path_end(const EdgePath& p) const {
  if (p.empty()) throw InputError("empty path has no end");
  return p.back().sign > 0 ? dst_[p.back().edge] : src_[p.back().edge];
}
bool PantsCW::path_composes(const EdgePath& p) const {
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    int end = p[i].sign > 0 ? dst_[p[i].edge] : src_[p[i].edge];
    int start = p[i + 1].sign > 0 ? src_[p[i + 1].edge] : dst_[p[i + 1].edge];
    if (end != start) return false;
  }
  return true;
}
bool PantsCW::path_closed(const EdgePath& p) const {
  return path_composes(p) && path_start(p) == path_end(p);
}

EdgePath PantsCW::curve_loop(int curve) const {
  return {{arc_top(curve), 1}, {arc_bottom(curve), 1}};
}

int PantsCW::pants_basepoint(int pants) const {
  int h = 3 * pants;
  int c = graph_.edge_of(h);
  return stub_sign(graph_, h) > 0 ? vertex_P(c) : vertex_Q(c);
}

EdgePath PantsCW::pants_loop(int pants, int k) const {
  if (pants < 0 || pants >= pants_count() || k < 0 || k > 2)
    throw InputError("pants loop index out of range");
  int curve[3], e[3];
  for (int j = 0; j < 3; ++j) {
    int h = 3 * pants + j;
    curve[j] = graph_.edge_of(h);
    e[j] = stub_sign(graph_, h);
  }
  auto A = [&](int j) { return OrientedEdge{arc_top(curve[j]), e[j]}; };
  auto Ainv = [&](int j) { return OrientedEdge{arc_top(curve[j]), -e[j]}; };
  auto B = [&](int j) { return OrientedEdge{arc_bottom(curve[j]), e[j]}; };
  auto S = [&](int j, int sign) { return OrientedEdge{seam(pants, j), sign}; };
  switch (k) {
    case 0:
      return {A(0), B(0)};
    case 1:
      return {A(0), S(1, 1), A(1), B(1), S(1, -1), Ainv(0)};
    default:
      return {A(0), S(1, 1), A(1), S(2, 1), A(2), B(2),
              S(2, -1), Ainv(1), S(1, -1), Ainv(0)};
  }
}

void PantsCW::validate() const {
  if ((int)faces_.size() != face_count())
    throw InternalError("face table size mismatch");
  std::vector<int> uses(edge_count(), 0), signed_uses(edge_count(), 0);
  for (int f = 0; f < face_count(); ++f) {
    const auto& b = faces_[f];
    if (b.size() != 6) throw InternalError("face boundary is not a hexagon");
    for (int i = 0; i < 6; ++i) {
      bool want_seam = (i % 2 == 0);
      if (edge_is_seam(b[i].edge) != want_seam)
        throw InternalError("face boundary does not alternate seam/arc");
      uses[b[i].edge] += 1;
      signed_uses[b[i].edge] += b[i].sign;
    }
    EdgePath path(b.begin(), b.end());
    if (!path_closed(path)) throw InternalError("face boundary does not close");
  }
  for (int e = 0; e < edge_count(); ++e) {
    if (uses[e] != 2)
      throw InternalError("edge does not lie on exactly two face slots");
    if (signed_uses[e] != 0)
      throw InternalError("edge face signs are not opposite");
  }
  if (euler_characteristic() != 2 - 2 * genus())
    throw InternalError("Euler characteristic does not match genus");
  for (int p = 0; p < pants_count(); ++p) {
    for (int k = 0; k < 3; ++k) {
      EdgePath l = pants_loop(p, k);
      if (!path_closed(l) || path_start(l) != pants_basepoint(p))
        throw InternalError("pants boundary loop is not based and closed");
    }
  }
  for (int c = 0; c < curve_count(); ++c) {
    EdgePath l = curve_loop(c);
    if (!path_closed(l) || path_start(l) != vertex_P(c))
      throw InternalError("curve loop is not based and closed");
  }
}

}  // namespace pants
