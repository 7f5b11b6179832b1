#pragma once
#include <array>
#include <optional>
#include <vector>

#include "pants/cw.hpp"
#include "pants/group.hpp"

namespace pants {

// Group-valued cocycle on a pants complex: one group element per edge in
// its forward orientation; the reverse traversal uses the inverse, and
// every face boundary multiplies to the identity (checked on construction).
// The complex and group are referenced, not owned; both must outlive the
// cocycle, and operations combining two cocycles require the same instances.
class Cocycle {
 public:
  Cocycle(const PantsCW* cw, const FiniteGroup* group,
          std::vector<FiniteGroup::Index> edge_values);

  static Cocycle identity(const PantsCW* cw, const FiniteGroup* group);

  const PantsCW& cw() const { return *cw_; }
  const FiniteGroup& group() const { return *group_; }
  const std::vector<FiniteGroup::Index>& edge_values() const { return values_; }

  // Value of one oriented edge: sign -1 gives the inverse.
  FiniteGroup::Index value(int edge, int sign) const;

  // Product of edge values along a closed path (the path must compose and
  // close; open paths are an input error).
  FiniteGroup::Index holonomy(const EdgePath& loop) const;

  FiniteGroup::Index curve_holonomy(int curve) const;

  // Holonomies of the three pants boundary loops based at the pants'
  // common base vertex, in the order [L2, L1, L0]; the ordered product is
  // always the identity.
  std::array<FiniteGroup::Index, 3> pants_boundary_holonomies(int pants) const;

  bool operator==(const Cocycle& o) const {
    return cw_ == o.cw_ && group_ == o.group_ && values_ == o.values_;
  }

 private:
  const PantsCW* cw_;
  const FiniteGroup* group_;
  std::vector<FiniteGroup::Index> values_;
};

// Vertex relabeling with identity at the basepoint.
class Gauge {
 public:
  Gauge(const PantsCW* cw, const FiniteGroup* group,
        std::vector<FiniteGroup::Index> vertex_values);

  static Gauge identity(const PantsCW* cw, const FiniteGroup* group);

  const PantsCW& cw() const { return *cw_; }
  const FiniteGroup& group() const { return *group_; }
  FiniteGroup::Index at(int vertex) const;
  const std::vector<FiniteGroup::Index>& vertex_values() const { return values_; }

  bool operator==(const Gauge& o) const {
    return cw_ == o.cw_ && group_ == o.group_ && values_ == o.values_;
  }

 private:
  const PantsCW* cw_;
  const FiniteGroup* group_;
  std::vector<FiniteGroup::Index> values_;
};

// c'(e) = d(x) c(e) d(y)^{-1} for an edge e: x -> y.  Holonomy of loops
// through the basepoint is unchanged; other loops conjugate by d at their
// base vertex.
Cocycle gauge_transform(const Cocycle& c, const Gauge& d);

// The gauge carrying c to c_target (unique with identity at the basepoint),
// or nullopt when the cocycles are not gauge-equivalent.  Follows a
// spanning tree of the 1-skeleton rooted at the basepoint.
std::optional<Gauge> find_gauge(const Cocycle& c, const Cocycle& c_target);

// Sign of the product over all faces of the lifted face-boundary holonomy,
// lifting each edge value through the cover (optionally flipping the lift
// of selected edges; the result never depends on those choices).  Each
// face's lifted holonomy is individually central +/-1.
int lifting_obstruction(const Cocycle& c, const BinaryCover& cover,
                        const std::vector<char>& lift_flips = {});

}  // namespace pants
