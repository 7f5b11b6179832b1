#include "pants/moves.hpp"

#include <algorithm>

#include "pants/errors.hpp"

namespace pants {
namespace {

std::vector<Word> identity_images(int g) {
  std::vector<Word> im;
  im.reserve(2 * g);
  for (int l = 1; l <= 2 * g; ++l) im.push_back(Word::gen((Letter)l));
  return im;
}

MCGMove make_move(std::string name, int g, std::vector<Word> images) {
  return MCGMove{std::move(name), g, std::move(images)};
}

Word gen_w(Letter l) { return Word::gen(l); }

}  // namespace

std::vector<MCGMove> move_set(int g) {
  if (g < 1) throw InputError("move set needs genus >= 1");
  std::vector<MCGMove> out;
  out.reserve(8 * g - 2);

  for (int i = 1; i <= g; ++i) {
    Word ai = gen_w(a_gen(i)), bi = gen_w(b_gen(i));
    for (int dir : {+1, -1}) {
      auto im = identity_images(g);
      im[b_gen(i) - 1] = bi * ai.power(dir);
      out.push_back(make_move(dir > 0 ? "ta" + std::to_string(i) : "ta" + std::to_string(i) + "~",
                              g, std::move(im)));
    }
    for (int dir : {+1, -1}) {
      auto im = identity_images(g);
      im[a_gen(i) - 1] = ai * bi.power(dir);
      out.push_back(make_move(dir > 0 ? "tb" + std::to_string(i) : "tb" + std::to_string(i) + "~",
                              g, std::move(im)));
    }
  }

  for (int i = 1; i + 1 <= g; ++i) {
    Word ai = gen_w(a_gen(i)), bi = gen_w(b_gen(i));
    Word aj = gen_w(a_gen(i + 1)), bj = gen_w(b_gen(i + 1));
    Word kappa = bi.inverse() * aj;
    for (int dir : {+1, -1}) {
      Word k = dir > 0 ? kappa : kappa.inverse();
      auto im = identity_images(g);
      im[a_gen(i) - 1] = ai * k;
      im[b_gen(i) - 1] = bi.conjugated_by(k.inverse());
      im[a_gen(i + 1) - 1] = aj.conjugated_by(k.inverse());
      im[b_gen(i + 1) - 1] = bj * k;
      out.push_back(make_move(dir > 0 ? "tc" + std::to_string(i) : "tc" + std::to_string(i) + "~",
                              g, std::move(im)));
    }
  }

  for (int i = 1; i + 1 <= g; ++i) {
    Word ai = gen_w(a_gen(i)), bi = gen_w(b_gen(i));
    Word aj = gen_w(a_gen(i + 1)), bj = gen_w(b_gen(i + 1));
    {
      Word Q = commutator(aj, bj);
      auto im = identity_images(g);
      im[a_gen(i) - 1] = aj;
      im[b_gen(i) - 1] = bj;
      im[a_gen(i + 1) - 1] = ai.conjugated_by(Q.inverse());
      im[b_gen(i + 1) - 1] = bi.conjugated_by(Q.inverse());
      out.push_back(make_move("sg" + std::to_string(i), g, std::move(im)));
    }
    {
      Word P = commutator(ai, bi);
      auto im = identity_images(g);
      im[a_gen(i) - 1] = aj.conjugated_by(P);
      im[b_gen(i) - 1] = bj.conjugated_by(P);
      im[a_gen(i + 1) - 1] = ai;
      im[b_gen(i + 1) - 1] = bi;
      out.push_back(make_move("sg" + std::to_string(i) + "~", g, std::move(im)));
    }
  }

  // Global twist about the curve b_1 b_2 ... b_g.
  {
    auto im = identity_images(g);
    for (int i = 1; i <= g; ++i) {
      Word Bm;  // b_i^-1 ... b_g^-1 b_1^-1 ... b_{i-1}^-1
      for (int j = i; j <= g; ++j) Bm = Bm * gen_w(b_gen(j)).inverse();
      for (int j = 1; j < i; ++j) Bm = Bm * gen_w(b_gen(j)).inverse();
      im[a_gen(i) - 1] = Bm * gen_w(a_gen(i));
    }
    out.push_back(make_move("tg", g, std::move(im)));
  }
  {
    auto im = identity_images(g);
    for (int i = 1; i <= g; ++i) {
      Word Bp;  // b_{i-1} ... b_1 b_g ... b_i
      for (int j = i - 1; j >= 1; --j) Bp = Bp * gen_w(b_gen(j));
      for (int j = g; j >= i; --j) Bp = Bp * gen_w(b_gen(j));
      im[a_gen(i) - 1] = Bp * gen_w(a_gen(i));
    }
    out.push_back(make_move("tg~", g, std::move(im)));
  }

  return out;
}

const MCGMove& find_move(const std::vector<MCGMove>& moves, const std::string& name) {
  for (const auto& m : moves)
    if (m.name == name) return m;
  throw InputError("unknown move '" + name + "'");
}

MCGMove compose_moves(const MCGMove& first, const MCGMove& second) {
  if (first.genus != second.genus) throw InputError("cannot compose moves of different genus");
  MCGMove out;
  out.name = first.name + ";" + second.name;
  out.genus = first.genus;
  out.images.reserve(first.images.size());
  for (const Word& w : first.images) out.images.push_back(second.apply(w));
  return out;
}

MCGMove identity_move(int g) { return make_move("id", g, identity_images(g)); }

bool relator_exact(const MCGMove& m) {
  Word R = surface_relator(m.genus);
  return m.apply(R) == R;
}

bool relator_goes_to_rotation(const MCGMove& m) {
  Word R = surface_relator(m.genus);
  Word image = m.apply(R).cyclically_reduced();
  if (image.length() != R.length()) return false;
  auto rots = R.cyclic_rotations();
  return std::find(rots.begin(), rots.end(), image) != rots.end();
}

std::vector<std::vector<long long>> homology_matrix(const MCGMove& m) {
  int n = 2 * m.genus;
  std::vector<std::vector<long long>> M(n, std::vector<long long>(n, 0));
  for (int col = 0; col < n; ++col)
    for (Letter l : m.images[col].letters())
      M[std::abs(l) - 1][col] += (l > 0 ? 1 : -1);
  return M;
}

bool is_symplectic(const std::vector<std::vector<long long>>& M) {
  int n = (int)M.size();
  if (n % 2) return false;
  auto J = [&](int r, int c) -> long long {
    if (r / 2 != c / 2) return 0;
    if (r % 2 == 0 && c % 2 == 1) return 1;
    if (r % 2 == 1 && c % 2 == 0) return -1;
    return 0;
  };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      long long v = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) v += M[p][r] * J(p, q) * M[q][c];
      if (v != J(r, c)) return false;
    }
  }
  return true;
}

}  // namespace pants
