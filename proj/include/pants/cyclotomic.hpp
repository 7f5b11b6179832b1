#pragma once
#include <cstdint>
#include <vector>

#include "pants/rational.hpp"

namespace pants {

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1) modulo the
// N-th cyclotomic polynomial.  Stored as an integer numerator vector over a
// single positive denominator with gcd(numerators, den) = 1, which keeps the
// inner loops of group-table construction in plain integer arithmetic.
//
// Policy: N <= 480 (covers lcm(120, 4n) for every supported dihedral order);
// larger orders are reported as unsupported rather than silently attempted.
class CyclotomicNumber {
public:
  static constexpr int kMaxOrder = 480;

  CyclotomicNumber() : order_(0), den_(1) {} // "unset"; usable only after assignment

  static CyclotomicNumber zero(int order);
  static CyclotomicNumber one(int order);
  static CyclotomicNumber from_rational(int order, const Rational& q);
  // zeta_N^k for any integer k (reduced mod N, negative allowed).
  static CyclotomicNumber zeta_pow(int order, long long k);
  // Real subfield helpers (exact): cos(pi/n), sin(pi/n); require 4n | order.
  static CyclotomicNumber cos_pi_over(int order, int n);
  static CyclotomicNumber sin_pi_over(int order, int n);

  int order() const { return order_; }
  int degree() const { return (int)num_.size(); } // phi(order)

  bool is_zero() const;
  bool is_rational() const;
  // The rational value when is_rational(); throws otherwise.
  Rational rational_value() const;
  Rational coeff(int i) const { return Rational(num_[i], den_); }
  const std::vector<long long>& numerators() const { return num_; }
  long long common_den() const { return den_; }

  CyclotomicNumber operator-() const;
  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const Rational& q) const;
  CyclotomicNumber inverse() const; // extended Euclid against Phi_N
  CyclotomicNumber operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }

  bool operator==(const CyclotomicNumber& o) const {
    return order_ == o.order_ && den_ == o.den_ && num_ == o.num_;
  }
  bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

  // Complex conjugate (zeta -> zeta^-1); restricts to identity on the real
  // subfield where the quaternion coordinates live.
  CyclotomicNumber conj() const;

  // Numeric value for reports only (never for decisions).
  double to_double_real() const;
  double to_double_imag() const;

  std::string str() const;
  size_t hash() const;

  static int euler_phi(int n);

private:
  void normalize();
  static void check_same(const CyclotomicNumber& a, const CyclotomicNumber& b);

  int order_;
  std::vector<long long> num_; // length phi(order)
  long long den_;              // > 0
};

} // namespace pants
