#include "pants/rational.hpp"

#include <cstdlib>

namespace pants {

namespace {

__int128 iabs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = iabs128(a);
  b = iabs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OverflowError(std::string("rational overflow in ") + what);
  return (long long)v;
}

} // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw InputError("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d == 0) throw InputError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n, "normalize");
  r.den_ = narrow(d, "normalize");
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return from_i128((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                   (__int128)den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return from_i128((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                   (__int128)den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return from_i128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw InputError("rational division by zero");
  return from_i128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
}

Rational Rational::inverse() const {
  if (num_ == 0) throw InputError("inverse of zero rational");
  return from_i128(den_, num_);
}

bool Rational::operator<(const Rational& o) const {
  return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw InputError("cannot parse rational: '" + s + "'");
  }
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw InputError("inverse of zero complex number");
  return {re_ / n, -(im_ / n)};
}

std::string GaussianRational::str() const {
  std::string s = re_.str();
  if (im_.sign() >= 0) s += "+";
  s += im_.str() + "*i";
  return s;
}

GaussianRational GaussianRational::parse(const std::string& s) {
  // Format "RE+IM*i" / "RE-IM*i" with RE, IM rationals "p" or "p/q".
  size_t star = s.rfind("*i");
  if (star == std::string::npos || star + 2 != s.size())
    throw InputError("cannot parse complex number (expected 're+im*i'): '" + s + "'");
  // Split at the sign that starts the imaginary part: the last '+' or '-'
  // that is not part of an exponent and not at position 0.
  size_t split = std::string::npos;
  for (size_t i = star; i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      if (s[i - 1] == '/' ) continue; // sign inside a fraction is malformed anyway
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw InputError("cannot parse complex number: '" + s + "'");
  Rational re = Rational::parse(s.substr(0, split));
  std::string imtext = s.substr(split, star - split);
  if (imtext == "+" || imtext == "-") imtext += "1";
  if (imtext[0] == '+') imtext = imtext.substr(1);
  Rational im = Rational::parse(imtext);
  return {re, im};
}

} // namespace pants
