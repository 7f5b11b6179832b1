#include "pants/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

#include "pants/errors.hpp"

namespace pants {
namespace {

// ---- exact coefficient-lexicographic order on quaternions ----

int cyclo_cmp(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const auto& an = a.numerators();
  const auto& bn = b.numerators();
  for (size_t j = 0; j < an.size(); ++j) {
    __int128 lhs = (__int128)an[j] * b.common_den();
    __int128 rhs = (__int128)bn[j] * a.common_den();
    if (lhs != rhs) return lhs < rhs ? -1 : 1;
  }
  return 0;
}

int quat_cmp(const Quaternion& a, const Quaternion& b) {
  if (int c = cyclo_cmp(a.w(), b.w())) return c;
  if (int c = cyclo_cmp(a.x(), b.x())) return c;
  if (int c = cyclo_cmp(a.y(), b.y())) return c;
  return cyclo_cmp(a.z(), b.z());
}

struct QuatLess {
  bool operator()(const Quaternion& a, const Quaternion& b) const {
    return quat_cmp(a, b) < 0;
  }
};

// ---- permutations on up to 5 points, composed right to left ----

struct Perm {
  std::vector<int> img;  // img[x] = image of x (0-indexed)
  bool operator<(const Perm& o) const { return img < o.img; }
  bool operator==(const Perm& o) const { return img == o.img; }
};

Perm perm_id(int m) {
  Perm p;
  p.img.resize(m);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

// Apply q first, then p.
Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r;
  r.img.resize(p.img.size());
  for (size_t x = 0; x < r.img.size(); ++x) r.img[x] = p.img[q.img[x]];
  return r;
}

// Cycles given with 1-based points, e.g. {{1,2},{3,4}} for (12)(34).
Perm perm_from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_id(m);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      p.img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
  return p;
}

// Disjoint cycle notation with 1-based points; identity prints as "e".
std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<char> used(p.img.size(), 0);
  for (size_t s = 0; s < p.img.size(); ++s) {
    if (used[s] || p.img[s] == (int)s) continue;
    out += '(';
    size_t x = s;
    do {
      used[x] = 1;
      out += char('1' + x);
      x = (size_t)p.img[x];
    } while (x != s);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Breadth-first closure over permutation words evaluated in parallel in the
// quaternion model.  Every edge of the Cayley graph is checked: reaching a
// known permutation with a different quaternion value would mean the model
// is not a homomorphism, and is reported rather than papered over.
std::map<std::string, std::string> wordize(int m, const std::vector<Perm>& pgens,
                                           const std::vector<Quaternion>& qgens,
                                           size_t expected_order) {
  std::map<Perm, Quaternion> seen;
  std::map<std::string, std::string> names;
  std::deque<std::pair<Perm, Quaternion>> work;
  Perm e = perm_id(m);
  Quaternion one = Quaternion::one(qgens.front().order());
  seen.emplace(e, one);
  names.emplace(one.str(), cycle_name(e));
  work.emplace_back(e, one);
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    for (size_t i = 0; i < pgens.size(); ++i) {
      Perm np = perm_mul(p, pgens[i]);
      Quaternion nq = RotationElement::canonicalize(q * qgens[i]);
      auto it = seen.find(np);
      if (it == seen.end()) {
        seen.emplace(np, nq);
        names.emplace(nq.str(), cycle_name(np));
        work.emplace_back(std::move(np), std::move(nq));
      } else if (!(it->second == nq)) {
        throw InternalError("quaternion model is not a homomorphic image of the permutation group");
      }
    }
  }
  if (seen.size() != expected_order)
    throw InternalError("permutation model closed with the wrong order");
  return names;
}

std::vector<Quaternion> quat_closure(const std::vector<Quaternion>& gens, bool canonical_sign) {
  std::map<Quaternion, char, QuatLess> seen;
  std::deque<Quaternion> work;
  Quaternion one = Quaternion::one(gens.front().order());
  seen.emplace(one, 1);
  work.push_back(one);
  while (!work.empty()) {
    Quaternion q = work.front();
    work.pop_front();
    for (const Quaternion& g : gens) {
      Quaternion nq = q * g;
      if (canonical_sign) nq = RotationElement::canonicalize(nq);
      if (seen.emplace(nq, 1).second) work.push_back(nq);
    }
  }
  std::vector<Quaternion> out;
  out.reserve(seen.size());
  for (const auto& kv : seen) out.push_back(kv.first);
  return out;
}

__int128 chk_mul_i128(__int128 a, __int128 b) {
  constexpr __int128 kBound = (__int128)1 << 124;
  __int128 aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
  if (bb != 0 && aa > kBound / bb) throw OverflowError("surface homomorphism count overflows");
  return a * b;
}

__int128 gcd_i128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::string group_kind_name(GroupKind kind, int n) {
  switch (kind) {
    case GroupKind::Dihedral: return "D" + std::to_string(n);
    case GroupKind::A4: return "A4";
    case GroupKind::S4: return "S4";
    case GroupKind::A5: return "A5";
    case GroupKind::Q8: return "Q8";
  }
  throw InputError("unknown group kind");
}

void FiniteGroup::finish(std::vector<Quaternion> elems,
                         std::map<std::string, std::string> name_by_key) {
  std::sort(elems.begin(), elems.end(),
            [](const Quaternion& a, const Quaternion& b) { return quat_cmp(a, b) < 0; });
  for (size_t i = 1; i < elems.size(); ++i)
    if (elems[i - 1] == elems[i]) throw InternalError("duplicate group elements");
  elements_ = std::move(elems);
  int n = order();

  std::map<Quaternion, Index, QuatLess> index_of_elt;
  for (int i = 0; i < n; ++i) index_of_elt.emplace(elements_[i], (Index)i);

  names_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto it = name_by_key.find(elements_[i].str());
    if (it == name_by_key.end()) throw InternalError("group element without a name");
    names_[i] = it->second;
  }

  auto id_it = index_of_elt.find(Quaternion::one(cyclo_order_));
  if (id_it == index_of_elt.end()) throw InternalError("identity missing from group closure");
  identity_ = id_it->second;

  mul_.assign((size_t)n * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Quaternion p = elements_[a] * elements_[b];
      if (sign_quotient_) p = RotationElement::canonicalize(p);
      auto it = index_of_elt.find(p);
      if (it == index_of_elt.end()) throw InternalError("group closure is not closed");
      mul_[(size_t)a * n + b] = it->second;
    }
  }

  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b) {
      if (mul((Index)a, (Index)b) == identity_) {
        inv_[a] = (Index)b;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("group element with no inverse");
  }

  long long sq = 0;
  for (int d : degrees_) sq += (long long)d * d;
  if (sq != n) throw InternalError("character degrees do not match the group order");
}

FiniteGroup FiniteGroup::make(GroupKind kind, int n) {
  FiniteGroup G;
  G.kind_ = kind;
  G.n_ = kind == GroupKind::Dihedral ? n : 0;
  G.name_ = group_kind_name(kind, n);
  G.sign_quotient_ = kind != GroupKind::Q8;

  if (kind == GroupKind::Dihedral) {
    if (n < 3) throw InputError("dihedral parameter must be at least 3");
    long long N = std::lcm(120LL, 4LL * n);
    if (N > CyclotomicNumber::kMaxOrder)
      throw UnsupportedCombination("dihedral parameter " + std::to_string(n) +
                                   " needs a cyclotomic order beyond the supported range");
    G.cyclo_order_ = (int)N;
    auto zero = CyclotomicNumber::zero(G.cyclo_order_);
    auto c = CyclotomicNumber::cos_pi_over(G.cyclo_order_, n);
    auto s = CyclotomicNumber::sin_pi_over(G.cyclo_order_, n);
    Quaternion r(c, zero, zero, s);  // rotation by 2*pi/n about the z-axis
    Quaternion refl = Quaternion::i(G.cyclo_order_);

    std::map<std::string, std::string> names;
    Quaternion cur = Quaternion::one(G.cyclo_order_);
    for (int j = 0; j < n; ++j) {
      std::string rot = j == 0 ? "e" : j == 1 ? "r" : "r^" + std::to_string(j);
      std::string flip = j == 0 ? "s" : j == 1 ? "r*s" : "r^" + std::to_string(j) + "*s";
      names.emplace(RotationElement::canonicalize(cur).str(), rot);
      names.emplace(RotationElement::canonicalize(cur * refl).str(), flip);
      cur = cur * r;
    }

    auto elems = quat_closure({r, refl}, true);
    if ((int)elems.size() != 2 * n) throw InternalError("dihedral closure has the wrong order");
    if (n % 2 == 1) {
      G.degrees_ = {1, 1};
      G.degrees_.insert(G.degrees_.end(), (n - 1) / 2, 2);
    } else {
      G.degrees_ = {1, 1, 1, 1};
      G.degrees_.insert(G.degrees_.end(), n / 2 - 1, 2);
    }
    G.finish(std::move(elems), std::move(names));
    return G;
  }

  G.cyclo_order_ = 120;
  const int N = G.cyclo_order_;
  auto zero = CyclotomicNumber::zero(N);
  auto half = CyclotomicNumber::from_rational(N, Rational(1, 2));

  if (kind == GroupKind::Q8) {
    std::vector<Quaternion> elems = {Quaternion::one(N),  -Quaternion::one(N),
                                     Quaternion::i(N),    -Quaternion::i(N),
                                     Quaternion::j(N),    -Quaternion::j(N),
                                     Quaternion::k(N),    -Quaternion::k(N)};
    static const char* kNames[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    std::map<std::string, std::string> names;
    for (int t = 0; t < 8; ++t) names.emplace(elems[t].str(), kNames[t]);
    auto closed = quat_closure({Quaternion::i(N), Quaternion::j(N)}, false);
    if (closed.size() != 8) throw InternalError("Q8 closure has the wrong order");
    G.degrees_ = {1, 1, 1, 1, 2};
    G.finish(std::move(closed), std::move(names));
    return G;
  }

  // Rotation groups of the tetrahedron, cube, and icosahedron, realized on
  // the permutation side as A4, S4 (permuting the cube's space diagonals),
  // and A5.  Each generator pair satisfies the defining triangle-group
  // relations on both sides, and `wordize` certifies the match elementwise.
  std::vector<Perm> pgens;
  std::vector<Quaternion> qgens;
  size_t expected = 0;
  int points = 0;
  if (kind == GroupKind::A4) {
    points = 4;
    pgens = {perm_from_cycles(4, {{1, 2, 3}}), perm_from_cycles(4, {{1, 2}, {3, 4}})};
    qgens = {Quaternion(half, half, half, half), Quaternion::i(N)};
    expected = 12;
    G.degrees_ = {1, 1, 1, 3};
  } else if (kind == GroupKind::S4) {
    points = 4;
    auto c4 = CyclotomicNumber::cos_pi_over(N, 4);  // sqrt(2)/2
    pgens = {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3, 4}})};
    qgens = {Quaternion(zero, zero, c4, c4), Quaternion(c4, zero, zero, c4)};
    expected = 24;
    G.degrees_ = {1, 1, 2, 3, 3};
  } else if (kind == GroupKind::A5) {
    points = 5;
    auto c5 = CyclotomicNumber::cos_pi_over(N, 5);        // tau/2
    auto c5m = c5 - half;                                 // (tau-1)/2 = 1/(2 tau)
    pgens = {perm_from_cycles(5, {{1, 2}, {3, 4}}), perm_from_cycles(5, {{1, 2, 3, 4, 5}})};
    qgens = {Quaternion::j(N), Quaternion(c5, c5m, half, zero)};
    expected = 60;
    G.degrees_ = {1, 3, 3, 4, 5};
  } else {
    throw InputError("unknown group kind");
  }

  auto names = wordize(points, pgens, qgens, expected);
  auto elems = quat_closure(qgens, true);
  if (elems.size() != expected) throw InternalError("rotation group closure has the wrong order");
  G.finish(std::move(elems), std::move(names));
  return G;
}

FiniteGroup::Index FiniteGroup::power(Index a, long long e) const {
  Index base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  Index res = identity_;
  while (e > 0) {
    if (e & 1) res = mul(res, base);
    base = mul(base, base);
    e >>= 1;
  }
  return res;
}

std::optional<FiniteGroup::Index> FiniteGroup::index_of_name(const std::string& name) const {
  for (int i = 0; i < order(); ++i)
    if (names_[i] == name) return (Index)i;
  return std::nullopt;
}

FiniteGroup::Index FiniteGroup::index_of(const Quaternion& q) const {
  Quaternion key = sign_quotient_ ? RotationElement::canonicalize(q) : q;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), key,
                             [](const Quaternion& a, const Quaternion& b) {
                               return quat_cmp(a, b) < 0;
                             });
  if (it == elements_.end() || !(*it == key))
    throw InputError("quaternion is not an element of " + name_);
  return (Index)(it - elements_.begin());
}

bool FiniteGroup::is_central(Index a) const {
  for (int x = 0; x < order(); ++x)
    if (mul(a, (Index)x) != mul((Index)x, a)) return false;
  return true;
}

bool FiniteGroup::is_abelian_subset(const std::vector<Index>& xs) const {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (mul(xs[i], xs[j]) != mul(xs[j], xs[i])) return false;
  return true;
}

std::vector<FiniteGroup::Index> FiniteGroup::closure(const std::vector<Index>& gens) const {
  std::vector<char> in(order(), 0);
  std::deque<Index> work;
  in[identity_] = 1;
  work.push_back(identity_);
  while (!work.empty()) {
    Index x = work.front();
    work.pop_front();
    for (Index g : gens) {
      Index y = mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::vector<Index> out;
  for (int i = 0; i < order(); ++i)
    if (in[i]) out.push_back((Index)i);
  return out;
}

bool FiniteGroup::generates(const std::vector<Index>& gens) const {
  return (int)closure(gens).size() == order();
}

long long FiniteGroup::surface_hom_count(int genus) const {
  if (genus < 1) throw InputError("genus must be at least 1");
  __int128 gpow = 1;
  for (int t = 0; t < 2 * genus - 1; ++t) gpow = chk_mul_i128(gpow, order());
  __int128 num = 0, den = 1;
  for (int d : degrees_) {
    __int128 dpow = 1;
    for (int t = 0; t < 2 * genus - 2; ++t) dpow = chk_mul_i128(dpow, d);
    __int128 nn = chk_mul_i128(num, dpow) + chk_mul_i128(gpow, den);
    __int128 dd = chk_mul_i128(den, dpow);
    __int128 g = gcd_i128(nn, dd);
    if (g > 1) {
      nn /= g;
      dd /= g;
    }
    num = nn;
    den = dd;
  }
  if (den != 1) throw InternalError("character-degree count is not an integer");
  if (num > (__int128)INT64_MAX) throw OverflowError("surface homomorphism count overflows");
  return (long long)num;
}

BinaryCover BinaryCover::make(const FiniteGroup& base) {
  if (!base.sign_quotient())
    throw UnsupportedCombination(base.name() +
                                 " is already a spin group and has no separate binary cover");
  BinaryCover cover(base);
  int n = base.order();
  cover.signs_.assign((size_t)n * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Quaternion prod = base.element((FiniteGroup::Index)a) * base.element((FiniteGroup::Index)b);
      const Quaternion& rep =
          base.element(base.mul((FiniteGroup::Index)a, (FiniteGroup::Index)b));
      if (prod == rep) {
        cover.signs_[(size_t)a * n + b] = 0;
      } else if (prod == -rep) {
        cover.signs_[(size_t)a * n + b] = 1;
      } else {
        throw InternalError("cover product does not match either sign of its class");
      }
    }
  }
  return cover;
}

BinaryCover::Index BinaryCover::inv(Index a) const {
  FiniteGroup::Index pa = project(a);
  FiniteGroup::Index pi = base_->inv(pa);
  int s = (a & 1) ^ sign_bit(pa, pi);
  return (Index)(2 * pi + s);
}

BinaryCover::Index BinaryCover::power(Index a, long long e) const {
  Index base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  Index res = identity();
  while (e > 0) {
    if (e & 1) res = mul(res, base);
    base = mul(base, base);
    e >>= 1;
  }
  return res;
}

Quaternion BinaryCover::element(Index i) const {
  Quaternion q = base_->element(project(i));
  return (i & 1) ? -q : q;
}

CyclotomicNumber BinaryCover::trace(Index i) const { return element(i).trace(); }

BinaryCover::Index BinaryCover::commutator_of_lifts(FiniteGroup::Index a,
                                                    FiniteGroup::Index b) const {
  Index u = section(a), v = section(b);
  return mul(mul(u, v), mul(inv(u), inv(v)));
}

}  // namespace pants
