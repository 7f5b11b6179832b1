#pragma once
#include <string>
#include <vector>

#include "pants/words.hpp"

namespace pants {

// A mapping-class move in generator-substitution form: the automorphism of
// the genus-g surface group sending positive letter l to images[l-1].
struct MCGMove {
  std::string name;
  int genus = 0;
  std::vector<Word> images;

  Word apply(const Word& w) const { return substitute(w, images); }
};

// The standard move set for genus g (8g-2 moves): twists ta_i / tb_i about
// the handle curves with inverses (i = 1..g), connector twists tc_i with
// inverses (i = 1..g-1), handle swaps sg_i with inverses (i = 1..g-1), and
// the global twist tg about b_1...b_g with its inverse.  An inverse move's
// name carries a trailing '~'.
std::vector<MCGMove> move_set(int g);
const MCGMove& find_move(const std::vector<MCGMove>& moves, const std::string& name);

// Composite endomorphism "apply first, then second".
MCGMove compose_moves(const MCGMove& first, const MCGMove& second);
MCGMove identity_move(int g);

// True when the move fixes the surface relator letter-for-letter.
bool relator_exact(const MCGMove& m);
// True when the move sends the relator to an exact cyclic rotation of
// itself after cyclic reduction; every move in move_set satisfies this.
bool relator_goes_to_rotation(const MCGMove& m);

// Induced action on H_1(surface; Z) in the basis a1, b1, ..., ag, bg;
// column j-1 holds the image of basis vector j.
std::vector<std::vector<long long>> homology_matrix(const MCGMove& m);
// M^T J M == J for the standard symplectic form pairing each a_i with b_i.
bool is_symplectic(const std::vector<std::vector<long long>>& M);

}  // namespace pants
