#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace pants {

// Letters of the free group on a_1, b_1, ..., a_g, b_g:
//   a_i = +(2i-1), b_i = +(2i), and the inverse of l is -l (1-indexed i).
using Letter = std::int16_t;

inline Letter a_gen(int i) { return (Letter)(2 * i - 1); }
inline Letter b_gen(int i) { return (Letter)(2 * i); }
std::string letter_name(Letter l);  // "a1", "b2^-1", ...

// A freely reduced word; every constructor and operation reduces, so the
// no-adjacent-cancellation invariant always holds.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word one() { return Word(); }
  static Word gen(Letter l) { return Word({l}); }
  // Parses the output of str(): whitespace-separated "a1", "b2^-1" tokens,
  // or "1" for the empty word.
  static Word parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return (int)letters_.size(); }
  bool empty() const { return letters_.empty(); }
  // Largest handle index appearing (0 for the empty word).
  int max_handle() const;

  Word operator*(const Word& o) const;
  Word inverse() const;
  // h * this * h^-1.
  Word conjugated_by(const Word& h) const;
  Word power(int k) const;

  // Writes this = c * core * c^-1 with core cyclically reduced; returns
  // core and stores c in *conjugator when given.
  Word cyclically_reduced(Word* conjugator = nullptr) const;
  // All cyclic rotations of this word (length() of them; {this} if empty).
  std::vector<Word> cyclic_rotations() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;  // length, then lex: deterministic order

  std::string str() const;
  size_t hash() const;

 private:
  std::vector<Letter> letters_;
};

// u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);

// The genus-g surface relator prod_{i=1..g} [a_i, b_i].
Word surface_relator(int g);

// Homomorphic extension of letter images: positive letter l maps to
// images[l-1], negative to its inverse.  images.size() must cover every
// letter of w.
Word substitute(const Word& w, const std::vector<Word>& images);

// True iff w represents the identity of pi_1 of the closed orientable
// genus-g surface.  Uses Dehn's algorithm (greedy relator-subword
// replacement) for g >= 2 and abelianization for g = 1.
bool trivial_in_surface_group(const Word& w, int g);
bool equal_in_surface_group(const Word& u, const Word& v, int g);

}  // namespace pants
