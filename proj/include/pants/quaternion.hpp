#pragma once
#include <array>
#include <string>

#include "pants/cyclotomic.hpp"

namespace pants {

// Exact quaternion over Q(zeta_N): houses SU(2) elements (unit norm).
class Quaternion {
public:
  Quaternion() = default;
  Quaternion(CyclotomicNumber w, CyclotomicNumber x, CyclotomicNumber y, CyclotomicNumber z)
      : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

  static Quaternion one(int order);
  static Quaternion minus_one(int order);
  static Quaternion i(int order);
  static Quaternion j(int order);
  static Quaternion k(int order);

  const CyclotomicNumber& w() const { return c_[0]; }
  const CyclotomicNumber& x() const { return c_[1]; }
  const CyclotomicNumber& y() const { return c_[2]; }
  const CyclotomicNumber& z() const { return c_[3]; }
  int order() const { return c_[0].order(); }

  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator-() const;
  Quaternion conjugate() const; // quaternion conjugate (negate i,j,k parts)
  CyclotomicNumber norm() const; // reduced norm w^2+x^2+y^2+z^2 (exact)
  bool is_unit() const;
  // Inverse of a unit quaternion (= conjugate); throws on non-units.
  Quaternion inverse() const;

  bool operator==(const Quaternion& o) const { return c_ == o.c_; }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }

  // SU(2) trace = 2w (exact cyclotomic value).
  CyclotomicNumber trace() const;

  std::string str() const;
  size_t hash() const;

private:
  std::array<CyclotomicNumber, 4> c_;
};

// SO(3) element represented as the sign-class {q, -q} of a unit quaternion,
// canonicalized so the first nonzero rational coefficient in the flattened
// (w, x, y, z) coordinate vector is positive.  project(lift(g)) = g holds by
// construction; the two lifts of a rotation are exactly lift(g) and -lift(g).
class RotationElement {
public:
  RotationElement() = default;
  explicit RotationElement(const Quaternion& q) : rep_(canonicalize(q)) {}

  static Quaternion canonicalize(const Quaternion& q);
  // True when q is already in canonical sign form.
  static bool is_canonical(const Quaternion& q);

  const Quaternion& rep() const { return rep_; }
  RotationElement operator*(const RotationElement& o) const {
    return RotationElement(rep_ * o.rep_);
  }
  RotationElement inverse() const { return RotationElement(rep_.inverse()); }

  bool operator==(const RotationElement& o) const { return rep_ == o.rep_; }
  bool operator!=(const RotationElement& o) const { return !(*this == o); }

  std::string str() const { return rep_.str(); }
  size_t hash() const { return rep_.hash() ^ 0x9e3779b97f4a7c15ull; }

private:
  Quaternion rep_;
};

} // namespace pants
