#pragma once
#include <vector>

#include "pants/cocycle.hpp"

namespace pants {

// Bridge between cocycles on a pants complex and standard-generator tuples
// of the surface group.
//
// Construction (group-free, once per complex): contract a spanning tree of
// the 1-skeleton, turning each hexagon boundary into a relator word over
// the non-tree edge letters; merge the relators into a single polygon by
// eliminating shared letters; then normalize the polygon to the standard
// form [x1,y1][x2,y2]...[xg,yg] by tracked cut-and-glue moves.  Every move
// is an elementary Tietze transformation recording the fresh letter's
// definition (forward word) and the eliminated letter's expression
// (backward word).
//
// tuple_of: evaluates the final letters on a cocycle's edge holonomies,
// yielding 2g elements (A1, B1, ..., Ag, Bg) satisfying the surface
// relator exactly.  cocycle_of: runs the substitutions backwards from a
// relator-satisfying tuple, producing a cocycle with identity on tree
// edges.  The composite cocycle_of then tuple_of is the identity on
// tuples, and tuple_of is unchanged by gauge transformations (the gauge
// is the identity at the basepoint).
class GeneratorBridge {
 public:
  explicit GeneratorBridge(const PantsCW* cw);

  const PantsCW& cw() const { return *cw_; }
  int genus() const { return cw_->genus(); }

  // Images of the standard generators under the cocycle's holonomy.
  std::vector<FiniteGroup::Index> tuple_of(const Cocycle& c) const;

  // The cocycle (identity on tree edges) whose standard-generator images
  // are the given tuple; the tuple must satisfy the surface relator.
  Cocycle cocycle_of(const FiniteGroup& group,
                     const std::vector<FiniteGroup::Index>& tuple) const;

  // Whether a CW edge was contracted into the spanning tree.
  bool edge_in_tree(int e) const { return tree_[e] != 0; }

 private:
  struct SignedLetter {
    int id;
    int sign;  // +1 or -1
  };
  using PWord = std::vector<SignedLetter>;

  struct Step {
    enum class Kind { Merge, CutGlue } kind;
    int eliminated;  // letter id removed by this step
    PWord bwd;       // its expression over letters alive after the step
    int created;     // CutGlue only: fresh letter id (-1 for Merge)
    PWord fwd;       // CutGlue only: its definition over pre-step letters
  };

  void build();
  static PWord inverse(const PWord& w);

  const PantsCW* cw_;
  std::vector<char> tree_;          // per CW edge
  std::vector<int> letter_of_edge_; // non-tree edge -> letter id, else -1
  std::vector<int> edge_of_letter_; // original letter id -> CW edge
  std::vector<Step> steps_;
  std::vector<SignedLetter> final_letters_;  // x1 y1 x2 y2 ... (signed)
  int letter_count_ = 0;  // originals plus fresh letters
};

}  // namespace pants
