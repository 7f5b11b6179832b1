#pragma once
#include <cstdint>
#include <functional>
#include <string>

#include "pants/errors.hpp"

namespace pants {

// Exact rational on int64 with __int128 intermediates.  All arithmetic in
// this project is small by construction (group element coordinates, traces,
// dihedral scales), so a narrowing failure signals a bug upstream and is
// reported as OverflowError rather than wrapped.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  static Rational from_i128(__int128 n, __int128 d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  double to_double() const { return double(num_) / double(den_); }
  std::string str() const; // "p" or "p/q"
  static Rational parse(const std::string& s);

  size_t hash() const {
    return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
  }

private:
  long long num_;
  long long den_; // > 0, gcd(|num|, den) = 1
};

// Exact complex number with rational real and imaginary parts (the field
// Q(i); closed under every step of the infinite-dihedral normalization).
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(Rational re) : re_(re), im_(0) {}
  GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}
  GaussianRational(long long re) : re_(re), im_(0) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational inverse() const;
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; } // |z|^2, exact

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string str() const;                       // "p/q+r/s*i"
  static GaussianRational parse(const std::string& s);

  size_t hash() const { return re_.hash() * 911382323u ^ im_.hash(); }

private:
  Rational re_, im_;
};

} // namespace pants
