#include "pants/cocycle.hpp"

#include "pants/errors.hpp"

namespace pants {

Cocycle::Cocycle(const PantsCW* cw, const FiniteGroup* group,
                 std::vector<FiniteGroup::Index> edge_values)
    : cw_(cw), group_(group), values_(std::move(edge_values)) {
  if (!cw_ || !group_) throw InputError("cocycle needs a complex and a group");
  if ((int)values_.size() != cw_->edge_count())
    throw InputError("cocycle needs one value per edge");
  for (auto v : values_)
    if (v >= group_->order()) throw InputError("cocycle value out of range");
  for (int f = 0; f < cw_->face_count(); ++f) {
    FiniteGroup::Index acc = group_->identity();
    for (const auto& oe : cw_->face_boundary(f))
      acc = group_->mul(acc, value(oe.edge, oe.sign));
    if (!group_->is_identity(acc))
      throw InputError("face boundary product is not the identity");
  }
}

Cocycle Cocycle::identity(const PantsCW* cw, const FiniteGroup* group) {
  if (!cw || !group) throw InputError("cocycle needs a complex and a group");
  return Cocycle(cw, group,
                 std::vector<FiniteGroup::Index>(cw->edge_count(),
                                                 group->identity()));
}

FiniteGroup::Index Cocycle::value(int edge, int sign) const {
  if (edge < 0 || edge >= (int)values_.size())
    throw InputError("edge out of range");
  return sign > 0 ? values_[edge] : group_->inv(values_[edge]);
}

FiniteGroup::Index Cocycle::holonomy(const EdgePath& loop) const {
  if (loop.empty() || !cw_->path_closed(loop))
    throw InputError("holonomy needs a closed edge path");
  FiniteGroup::Index acc = group_->identity();
  for (const auto& oe : loop) acc = group_->mul(acc, value(oe.edge, oe.sign));
  return acc;
}

FiniteGroup::Index Cocycle::curve_holonomy(int curve) const {
  return holonomy(cw_->curve_loop(curve));
}

std::array<FiniteGroup::Index, 3> Cocycle::pants_boundary_holonomies(
    int pants) const {
  return {holonomy(cw_->pants_loop(pants, 2)), holonomy(cw_->pants_loop(pants, 1)),
          holonomy(cw_->pants_loop(pants, 0))};
}

Gauge::Gauge(const PantsCW* cw, const FiniteGroup* group,
             std::vector<FiniteGroup::Index> vertex_values)
    : cw_(cw), group_(group), values_(std::move(vertex_values)) {
  if (!cw_ || !group_) throw InputError("gauge needs a complex and a group");
  if ((int)values_.size() != cw_->vertex_count())
    throw InputError("gauge needs one value per vertex");
  for (auto v : values_)
    if (v >= group_->order()) throw InputError("gauge value out of range");
  if (!group_->is_identity(values_[cw_->basepoint()]))
    throw InputError("gauge must be the identity at the basepoint");
}

Gauge Gauge::identity(const PantsCW* cw, const FiniteGroup* group) {
  if (!cw || !group) throw InputError("gauge needs a complex and a group");
  return Gauge(cw, group,
               std::vector<FiniteGroup::Index>(cw->vertex_count(),
                                               group->identity()));
}

FiniteGroup::Index Gauge::at(int vertex) const {
  if (vertex < 0 || vertex >= (int)values_.size())
    throw InputError("vertex out of range");
  return values_[vertex];
}

Cocycle gauge_transform(const Cocycle& c, const Gauge& d) {
  if (&c.cw() != &d.cw() || &c.group() != &d.group())
    throw InputError("gauge and cocycle live on different complexes");
  const FiniteGroup& G = c.group();
  std::vector<FiniteGroup::Index> out(c.edge_values().size());
  for (int e = 0; e < (int)out.size(); ++e) {
    FiniteGroup::Index x = d.at(c.cw().edge_source(e));
    FiniteGroup::Index y = d.at(c.cw().edge_target(e));
    out[e] = G.mul(G.mul(x, c.edge_values()[e]), G.inv(y));
  }
  return Cocycle(&c.cw(), &G, std::move(out));
}

std::optional<Gauge> find_gauge(const Cocycle& c, const Cocycle& c_target) {
  if (&c.cw() != &c_target.cw() || &c.group() != &c_target.group())
    throw InputError("cocycles live on different complexes");
  const PantsCW& cw = c.cw();
  const FiniteGroup& G = c.group();
  // Walk a spanning tree from the basepoint: each tree edge determines the
  // far vertex's gauge value from c'(e) = d(x) c(e) d(y)^{-1}.
  std::vector<FiniteGroup::Index> d(cw.vertex_count(), G.identity());
  std::vector<char> known(cw.vertex_count(), 0);
  known[cw.basepoint()] = 1;
  std::vector<int> queue = {cw.basepoint()};
  // Vertex-to-edges incidence.
  std::vector<std::vector<int>> out_edges(cw.vertex_count());
  for (int e = 0; e < cw.edge_count(); ++e) {
    out_edges[cw.edge_source(e)].push_back(e);
    out_edges[cw.edge_target(e)].push_back(e);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int e : out_edges[x]) {
      int src = cw.edge_source(e), dst = cw.edge_target(e);
      int y = src == x ? dst : src;
      if (known[y]) continue;
      if (src == x) {
        // d(y) = c'(e)^{-1} d(x) c(e)
        d[y] = G.mul(G.mul(G.inv(c_target.edge_values()[e]), d[x]),
                     c.edge_values()[e]);
      } else {
        // e: y -> x, so d(y) = c'(e) d(x) c(e)^{-1}
        d[y] = G.mul(G.mul(c_target.edge_values()[e], d[x]),
                     G.inv(c.edge_values()[e]));
      }
      known[y] = 1;
      queue.push_back(y);
    }
  }
  Gauge gauge(&cw, &G, std::move(d));
  if (gauge_transform(c, gauge) == c_target) return gauge;
  return std::nullopt;
}

int lifting_obstruction(const Cocycle& c, const BinaryCover& cover,
                        const std::vector<char>& lift_flips) {
  if (&cover.base() != &c.group())
    throw InputError("cover does not cover the cocycle's group");
  if (!lift_flips.empty() && (int)lift_flips.size() != c.cw().edge_count())
    throw InputError("lift flips need one entry per edge");
  const PantsCW& cw = c.cw();
  std::vector<BinaryCover::Index> lift(cw.edge_count());
  for (int e = 0; e < cw.edge_count(); ++e) {
    lift[e] = cover.section(c.edge_values()[e]);
    if (!lift_flips.empty() && lift_flips[e]) lift[e] = cover.other_lift(lift[e]);
  }
  int sign = 1;
  for (int f = 0; f < cw.face_count(); ++f) {
    BinaryCover::Index acc = cover.identity();
    for (const auto& oe : cw.face_boundary(f)) {
      BinaryCover::Index x = lift[oe.edge];
      if (oe.sign < 0) x = cover.inv(x);
      acc = cover.mul(acc, x);
    }
    if (!cover.is_plus_minus_one(acc))
      throw InternalError("lifted face holonomy is not central +/-1");
    if (cover.is_minus_one(acc)) sign = -sign;
  }
  return sign;
}

}  // namespace pants
