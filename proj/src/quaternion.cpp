#include "pants/quaternion.hpp"

namespace pants {

Quaternion Quaternion::one(int order) {
  return {CyclotomicNumber::one(order), CyclotomicNumber::zero(order),
          CyclotomicNumber::zero(order), CyclotomicNumber::zero(order)};
}

Quaternion Quaternion::minus_one(int order) {
  return {-CyclotomicNumber::one(order), CyclotomicNumber::zero(order),
          CyclotomicNumber::zero(order), CyclotomicNumber::zero(order)};
}

Quaternion Quaternion::i(int order) {
  return {CyclotomicNumber::zero(order), CyclotomicNumber::one(order),
          CyclotomicNumber::zero(order), CyclotomicNumber::zero(order)};
}

Quaternion Quaternion::j(int order) {
  return {CyclotomicNumber::zero(order), CyclotomicNumber::zero(order),
          CyclotomicNumber::one(order), CyclotomicNumber::zero(order)};
}

Quaternion Quaternion::k(int order) {
  return {CyclotomicNumber::zero(order), CyclotomicNumber::zero(order),
          CyclotomicNumber::zero(order), CyclotomicNumber::one(order)};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  const auto& a = c_;
  const auto& b = o.c_;
  return {
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
      a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
      a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
  };
}

Quaternion Quaternion::operator-() const {
  return {-c_[0], -c_[1], -c_[2], -c_[3]};
}

Quaternion Quaternion::conjugate() const {
  return {c_[0], -c_[1], -c_[2], -c_[3]};
}

CyclotomicNumber Quaternion::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

bool Quaternion::is_unit() const {
  CyclotomicNumber n = norm();
  return n.is_rational() && n.rational_value() == Rational(1);
}

Quaternion Quaternion::inverse() const {
  if (!is_unit()) throw InternalError("inverse of non-unit quaternion");
  return conjugate();
}

CyclotomicNumber Quaternion::trace() const {
  return c_[0] * Rational(2);
}

std::string Quaternion::str() const {
  return "(" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ", " + c_[3].str() + ")";
}

size_t Quaternion::hash() const {
  size_t h = 14695981039346656037ull;
  for (const auto& comp : c_) {
    h ^= comp.hash();
    h *= 1099511628211ull;
  }
  return h;
}

Quaternion RotationElement::canonicalize(const Quaternion& q) {
  // Sign of the first nonzero numerator in flattened coordinate order; the
  // component denominators are positive, so this decides the sign of the
  // first nonzero rational coefficient.
  const CyclotomicNumber* comps[4] = {&q.w(), &q.x(), &q.y(), &q.z()};
  for (const auto* comp : comps) {
    for (long long v : comp->numerators()) {
      if (v > 0) return q;
      if (v < 0) return -q;
    }
  }
  return q; // zero quaternion; never a group element
}

bool RotationElement::is_canonical(const Quaternion& q) {
  return canonicalize(q) == q;
}

} // namespace pants
