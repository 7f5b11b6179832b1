#include "pants/words.hpp"

#include <algorithm>
#include <sstream>

#include "pants/errors.hpp"

namespace pants {
namespace {

std::vector<Letter> free_reduce(std::vector<Letter> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (l == 0) throw InputError("word letter 0 is not a generator");
    if (!out.empty() && out.back() == (Letter)(-l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

std::string letter_name(Letter l) {
  if (l == 0) throw InputError("word letter 0 is not a generator");
  int idx = (std::abs(l) + 1) / 2;
  char kind = (std::abs(l) % 2 == 1) ? 'a' : 'b';
  std::string s = std::string(1, kind) + std::to_string(idx);
  if (l < 0) s += "^-1";
  return s;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(std::move(letters))) {}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> ls;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    size_t p = 0;
    bool inv = false;
    if (tok.size() >= 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.size() < 2 || (tok[p] != 'a' && tok[p] != 'b'))
      throw InputError("cannot parse word token '" + tok + "'");
    int idx = 0;
    for (size_t q = 1; q < tok.size(); ++q) {
      if (!isdigit((unsigned char)tok[q])) throw InputError("cannot parse word token '" + tok + "'");
      idx = idx * 10 + (tok[q] - '0');
    }
    if (idx < 1 || idx > 16000) throw InputError("word generator index out of range");
    Letter l = tok[p] == 'a' ? a_gen(idx) : b_gen(idx);
    ls.push_back(inv ? (Letter)(-l) : l);
  }
  return Word(std::move(ls));
}

int Word::max_handle() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, (std::abs(l) + 1) / 2);
  return m;
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(ls));
}

Word Word::inverse() const {
  std::vector<Letter> ls(letters_.rbegin(), letters_.rend());
  for (Letter& l : ls) l = (Letter)(-l);
  Word w;
  w.letters_ = std::move(ls);  // reversal of a reduced word is reduced
  return w;
}

Word Word::conjugated_by(const Word& h) const { return h * *this * h.inverse(); }

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  int n = std::abs(k);
  Word out;
  for (int t = 0; t < n; ++t) out = out * base;
  return out;
}

Word Word::cyclically_reduced(Word* conjugator) const {
  std::vector<Letter> core = letters_;
  std::vector<Letter> conj;
  while (core.size() >= 2 && core.front() == (Letter)(-core.back())) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  if (conjugator) {
    Word c;
    c.letters_ = std::move(conj);  // prefix of a reduced word is reduced
    *conjugator = c;
  }
  Word w;
  w.letters_ = std::move(core);
  return w;
}

std::vector<Word> Word::cyclic_rotations() const {
  if (letters_.empty()) return {Word()};
  std::vector<Word> out;
  out.reserve(letters_.size());
  for (size_t r = 0; r < letters_.size(); ++r) {
    std::vector<Letter> ls;
    ls.reserve(letters_.size());
    ls.insert(ls.end(), letters_.begin() + r, letters_.end());
    ls.insert(ls.end(), letters_.begin(), letters_.begin() + r);
    out.emplace_back(std::move(ls));
  }
  return out;
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  return letters_ < o.letters_;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += letter_name(letters_[i]);
  }
  return s;
}

size_t Word::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (Letter l : letters_) h = h * 1099511628211ull + (size_t)(std::uint16_t)l;
  return h;
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

Word surface_relator(int g) {
  if (g < 1) throw InputError("surface relator needs genus >= 1");
  Word r;
  for (int i = 1; i <= g; ++i)
    r = r * commutator(Word::gen(a_gen(i)), Word::gen(b_gen(i)));
  return r;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (Letter l : w.letters()) {
    size_t idx = (size_t)std::abs(l) - 1;
    if (idx >= images.size()) throw InputError("substitution image missing for " + letter_name(l));
    out = out * (l > 0 ? images[idx] : images[idx].inverse());
  }
  return out;
}

namespace {

// One pass of Dehn's algorithm on a cyclic word: find a cyclic subword that
// matches more than half of some rotation of the relator or its inverse and
// replace it by the (strictly shorter) inverse complement.  Returns true if
// a replacement happened.
bool dehn_step(Word& w, const std::vector<Word>& relator_rotations, int half) {
  if (w.empty()) return false;
  const auto& wl = w.letters();
  int n = (int)wl.size();
  for (int p = 0; p < n; ++p) {
    for (const Word& r : relator_rotations) {
      const auto& rl = r.letters();
      int m = (int)rl.size();
      int lcp = 0;
      while (lcp < m && lcp < n && wl[(p + lcp) % n] == rl[lcp]) ++lcp;
      if (lcp > half) {
        // w (cyclically) = prefix . tail, prefix = rl[0..lcp);
        // rl = prefix . rest with prefix = rest^-1 in the group.
        std::vector<Letter> rest(rl.begin() + lcp, rl.end());
        std::reverse(rest.begin(), rest.end());
        for (Letter& l : rest) l = (Letter)(-l);
        std::vector<Letter> tail;
        for (int t = lcp; t < n; ++t) tail.push_back(wl[(p + t) % n]);
        std::vector<Letter> next = std::move(rest);
        next.insert(next.end(), tail.begin(), tail.end());
        w = Word(std::move(next));
        return true;
      }
    }
  }
  return false;
}

}  // namespace

bool trivial_in_surface_group(const Word& w, int g) {
  if (g < 1) throw InputError("surface group needs genus >= 1");
  if (w.max_handle() > g) throw InputError("word uses a handle beyond the genus");
  if (g == 1) {
    // pi_1 of the torus is Z^2: trivial iff both exponent sums vanish.
    long long ea = 0, eb = 0;
    for (Letter l : w.letters()) (std::abs(l) % 2 == 1 ? ea : eb) += (l > 0 ? 1 : -1);
    return ea == 0 && eb == 0;
  }
  Word R = surface_relator(g);
  std::vector<Word> rot;
  for (const Word& r : {R, R.inverse()}) {
    auto rs = r.cyclic_rotations();
    rot.insert(rot.end(), rs.begin(), rs.end());
  }
  Word cur = w.cyclically_reduced();
  // Greendlinger: a nonempty cyclically reduced word equal to 1 contains a
  // relator subword longer than half the relator, so the loop below reaches
  // the empty word exactly on trivial inputs.  Each step strictly shortens.
  while (!cur.empty()) {
    if (!dehn_step(cur, rot, 2 * g)) return false;
    cur = cur.cyclically_reduced();
  }
  return true;
}

bool equal_in_surface_group(const Word& u, const Word& v, int g) {
  return trivial_in_surface_group(u * v.inverse(), g);
}

}  // namespace pants
