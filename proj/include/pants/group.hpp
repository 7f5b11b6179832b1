#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pants/quaternion.hpp"

namespace pants {

enum class GroupKind { Dihedral, A4, S4, A5, Q8 };

// Display name: "D5", "A4", "S4", "A5", "Q8".
std::string group_kind_name(GroupKind kind, int n = 0);

// A finite subgroup of the rotation group SO(3) or of the unit quaternions
// SU(2), realized by exact cyclotomic quaternions.
//
// For the rotation kinds (dihedral, A4, S4, A5) every element is stored as
// the canonical sign representative of its {q, -q} class and multiplication
// is taken up to sign; the Q8 kind is a genuine subgroup of SU(2) and keeps
// signs.  Elements are sorted in coefficient-lexicographic order of their
// flattened (w, x, y, z) coordinates, so indices are deterministic.
class FiniteGroup {
 public:
  using Index = std::uint16_t;

  // Dihedral requires n >= 3 with n dividing 120 (so that the rotation by
  // pi/n lives in the supported cyclotomic field); other kinds ignore n.
  static FiniteGroup make(GroupKind kind, int n = 0);

  GroupKind kind() const { return kind_; }
  int dihedral_n() const { return n_; }
  const std::string& name() const { return name_; }
  int order() const { return (int)elements_.size(); }
  // True when elements are sign classes (all kinds except Q8).
  bool sign_quotient() const { return sign_quotient_; }
  int cyclotomic_order() const { return cyclo_order_; }

  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return mul_[(size_t)a * order() + b]; }
  Index inv(Index a) const { return inv_[a]; }
  // h x h^-1.
  Index conjugate(Index h, Index x) const { return mul(mul(h, x), inv(h)); }
  // a b a^-1 b^-1.
  Index commutator(Index a, Index b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  Index power(Index a, long long e) const;

  const Quaternion& element(Index i) const { return elements_[i]; }
  const std::string& element_name(Index i) const { return names_[i]; }
  std::optional<Index> index_of_name(const std::string& name) const;
  // Canonicalizes the sign for rotation kinds; throws InputError if the
  // quaternion is not an element of the group.
  Index index_of(const Quaternion& q) const;

  bool is_identity(Index a) const { return a == identity_; }
  bool is_central(Index a) const;
  bool is_abelian_subset(const std::vector<Index>& xs) const;
  std::vector<Index> closure(const std::vector<Index>& gens) const;
  bool generates(const std::vector<Index>& gens) const;

  // Degrees of the irreducible complex characters (with multiplicity);
  // their squares sum to the group order.
  const std::vector<int>& character_degrees() const { return degrees_; }
  // |Hom(pi_1(closed genus-g surface), G)| by the Frobenius-Mednykh count
  // |G|^(2g-1) * sum_d d^(2-2g).  Exact; throws OverflowError if the value
  // does not fit in 64 bits.
  long long surface_hom_count(int genus) const;

 private:
  FiniteGroup() = default;
  void finish(std::vector<Quaternion> elems,
              std::map<std::string, std::string> name_by_key);

  GroupKind kind_ = GroupKind::Q8;
  int n_ = 0;
  std::string name_;
  bool sign_quotient_ = true;
  int cyclo_order_ = 0;
  Index identity_ = 0;
  std::vector<Quaternion> elements_;
  std::vector<std::string> names_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<int> degrees_;
};

// The 2-to-1 spin cover of a rotation-kind FiniteGroup.  Cover index
// 2*b + s denotes (-1)^s * rep(b) where rep(b) is the base group's
// canonical representative; -1 generates the kernel of the projection.
class BinaryCover {
 public:
  using Index = std::uint16_t;

  // Base must be a sign-quotient group (covering Q8 is refused: it is
  // already a spin group).
  static BinaryCover make(const FiniteGroup& base);

  const FiniteGroup& base() const { return *base_; }
  int order() const { return 2 * base_->order(); }
  Index identity() const { return (Index)(2 * base_->identity()); }
  Index minus_one() const { return (Index)(2 * base_->identity() + 1); }

  Index mul(Index a, Index b) const {
    FiniteGroup::Index pa = (FiniteGroup::Index)(a >> 1), pb = (FiniteGroup::Index)(b >> 1);
    int s = (a ^ b) & 1;
    return (Index)(2 * base_->mul(pa, pb) + (s ^ sign_bit(pa, pb)));
  }
  Index inv(Index a) const;
  Index power(Index a, long long e) const;

  FiniteGroup::Index project(Index i) const { return (FiniteGroup::Index)(i >> 1); }
  // Canonical-sign lift; project(section(b)) == b.
  Index section(FiniteGroup::Index b) const { return (Index)(2 * b); }
  Index other_lift(Index i) const { return (Index)(i ^ 1); }
  bool is_minus_one(Index i) const { return i == minus_one(); }
  bool is_plus_minus_one(Index i) const { return (i >> 1) == base_->identity(); }

  Quaternion element(Index i) const;
  CyclotomicNumber trace(Index i) const;

  // [lift(a), lift(b)] in the cover; independent of the choice of lifts
  // because the sign ambiguity cancels in a commutator.
  Index commutator_of_lifts(FiniteGroup::Index a, FiniteGroup::Index b) const;

 private:
  explicit BinaryCover(const FiniteGroup& base) : base_(&base) {}
  int sign_bit(FiniteGroup::Index a, FiniteGroup::Index b) const {
    return (signs_[(size_t)a * base_->order() + b]) ? 1 : 0;
  }

  const FiniteGroup* base_;
  // signs_[a*|G|+b] = 1 iff rep(a)*rep(b) == -rep(a*b).
  std::vector<std::uint8_t> signs_;
};

}  // namespace pants
