#include "pants/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace pants {

namespace {

long long narrow128(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OverflowError(std::string("cyclotomic overflow in ") + what);
  return (long long)v;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Integer polynomials as coefficient vectors, lowest degree first.
using IPoly = std::vector<long long>;

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials (remainder must vanish).
IPoly idiv(IPoly num, const IPoly& den) {
  IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  long long lead = den.back();
  for (int k = (int)num.size() - 1; k >= (int)den.size() - 1; --k) {
    long long c = num[k];
    if (c == 0) continue;
    if (c % lead != 0) throw InternalError("cyclotomic polynomial division not exact");
    long long f = c / lead;
    q[k - (int)den.size() + 1] = f;
    for (size_t j = 0; j < den.size(); ++j) {
      __int128 v = (__int128)num[k - (int)den.size() + 1 + j] - (__int128)f * den[j];
      num[k - (int)den.size() + 1 + j] = narrow128(v, "poly division");
    }
  }
  itrim(num);
  if (!num.empty()) throw InternalError("cyclotomic polynomial division has remainder");
  return q;
}

struct CycloContext {
  int order = 0;
  int phi = 0;
  // rows[m] for m in [0, order): zeta^m expressed in the power basis.
  std::vector<std::vector<long long>> rows;
};

IPoly cyclotomic_poly(int n, std::map<int, IPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d for proper divisors d.
  IPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = idiv(p, cyclotomic_poly(d, memo));
  memo[n] = p;
  return p;
}

const CycloContext& context(int order) {
  static std::map<int, CycloContext> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 1 || order > CyclotomicNumber::kMaxOrder)
    throw UnsupportedCombination("cyclotomic order " + std::to_string(order) +
                                 " outside supported range [1, " +
                                 std::to_string(CyclotomicNumber::kMaxOrder) + "]");
  static std::map<int, IPoly> memo;
  IPoly phi_poly = cyclotomic_poly(order, memo);
  CycloContext ctx;
  ctx.order = order;
  ctx.phi = (int)phi_poly.size() - 1;
  ctx.rows.assign(order, std::vector<long long>(ctx.phi, 0));
  for (int m = 0; m < ctx.phi && m < order; ++m) ctx.rows[m][m] = 1;
  // zeta^phi = -(low coefficients of Phi); then shift-and-reduce upward.
  std::vector<long long> base(ctx.phi);
  for (int j = 0; j < ctx.phi; ++j) base[j] = -phi_poly[j];
  if (ctx.phi < order) ctx.rows[ctx.phi] = base;
  for (int m = ctx.phi + 1; m < order; ++m) {
    const auto& prev = ctx.rows[m - 1];
    std::vector<__int128> acc(ctx.phi, 0);
    for (int j = 1; j < ctx.phi; ++j) acc[j] = prev[j - 1];
    __int128 top = prev[ctx.phi - 1];
    for (int j = 0; j < ctx.phi; ++j) acc[j] += top * base[j];
    for (int j = 0; j < ctx.phi; ++j) ctx.rows[m][j] = narrow128(acc[j], "rewrite rows");
  }
  return cache.emplace(order, std::move(ctx)).first->second;
}

} // namespace

int CyclotomicNumber::euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

void CyclotomicNumber::check_same(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ != b.order_ || a.order_ == 0)
    throw InternalError("cyclotomic order mismatch (" + std::to_string(a.order_) + " vs " +
                        std::to_string(b.order_) + ")");
}

void CyclotomicNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  long long g = den_;
  for (long long v : num_) {
    g = std::gcd(g, v < 0 ? -v : v);
    if (g == 1) break;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& v : num_) v /= g;
  }
}

CyclotomicNumber CyclotomicNumber::zero(int order) {
  const auto& ctx = context(order);
  CyclotomicNumber c;
  c.order_ = order;
  c.num_.assign(ctx.phi, 0);
  c.den_ = 1;
  return c;
}

CyclotomicNumber CyclotomicNumber::one(int order) {
  return from_rational(order, Rational(1));
}

CyclotomicNumber CyclotomicNumber::from_rational(int order, const Rational& q) {
  CyclotomicNumber c = zero(order);
  c.num_[0] = q.num();
  c.den_ = q.den();
  return c;
}

CyclotomicNumber CyclotomicNumber::zeta_pow(int order, long long k) {
  const auto& ctx = context(order);
  long long m = k % order;
  if (m < 0) m += order;
  CyclotomicNumber c = zero(order);
  c.num_.assign(ctx.rows[(size_t)m].begin(), ctx.rows[(size_t)m].end());
  c.den_ = 1;
  c.normalize();
  return c;
}

CyclotomicNumber CyclotomicNumber::cos_pi_over(int order, int n) {
  if (order % (2 * n) != 0)
    throw InternalError("cos(pi/n) needs 2n | order");
  long long k = order / (2 * n);
  CyclotomicNumber c = (zeta_pow(order, k) + zeta_pow(order, -k)) * Rational(1, 2);
  return c;
}

CyclotomicNumber CyclotomicNumber::sin_pi_over(int order, int n) {
  if (order % (2 * n) != 0 || order % 4 != 0)
    throw InternalError("sin(pi/n) needs 2n | order and 4 | order");
  long long k = order / (2 * n);
  // (z^k - z^-k) / (2i) = (z^k - z^-k) * (-i) / 2 with i = zeta^(order/4).
  CyclotomicNumber diff = zeta_pow(order, k) - zeta_pow(order, -k);
  CyclotomicNumber minus_i = -zeta_pow(order, order / 4);
  return (diff * minus_i) * Rational(1, 2);
}

bool CyclotomicNumber::is_zero() const {
  for (long long v : num_)
    if (v != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw InternalError("cyclotomic value is not rational");
  return Rational(num_.empty() ? 0 : num_[0], den_);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber c = *this;
  for (auto& v : c.num_) v = -v;
  return c;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  check_same(*this, o);
  CyclotomicNumber c = zero(order_);
  long long g = std::gcd(den_, o.den_);
  long long f1 = o.den_ / g, f2 = den_ / g;
  c.den_ = narrow128((__int128)den_ * f1, "add");
  for (size_t i = 0; i < num_.size(); ++i)
    c.num_[i] = narrow128((__int128)num_[i] * f1 + (__int128)o.num_[i] * f2, "add");
  c.normalize();
  return c;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  check_same(*this, o);
  const auto& ctx = context(order_);
  int phi = ctx.phi;
  std::vector<__int128> conv(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.num_[j] == 0) continue;
      conv[i + j] += (__int128)num_[i] * o.num_[j];
    }
  }
  for (int m = 2 * phi - 2; m >= phi; --m) {
    __int128 top = conv[m];
    if (top == 0) continue;
    const auto& row = ctx.rows[m];
    for (int j = 0; j < phi; ++j)
      if (row[j] != 0) conv[j] += top * row[j];
    conv[m] = 0;
  }
  CyclotomicNumber c = zero(order_);
  __int128 den = (__int128)den_ * o.den_;
  __int128 g = den;
  for (int j = 0; j < phi; ++j) g = gcd128(g, conv[j]);
  if (g > 1) {
    den /= g;
    for (int j = 0; j < phi; ++j) conv[j] /= g;
  }
  c.den_ = narrow128(den, "mul");
  for (int j = 0; j < phi; ++j) c.num_[j] = narrow128(conv[j], "mul");
  return c;
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& q) const {
  CyclotomicNumber c = zero(order_);
  for (size_t i = 0; i < num_.size(); ++i)
    c.num_[i] = narrow128((__int128)num_[i] * q.num(), "scale");
  c.den_ = narrow128((__int128)den_ * q.den(), "scale");
  c.normalize();
  return c;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  const auto& ctx = context(order_);
  std::vector<__int128> acc(ctx.phi, 0);
  for (int j = 0; j < ctx.phi; ++j) {
    if (num_[j] == 0) continue;
    const auto& row = ctx.rows[(order_ - j) % order_];
    for (int t = 0; t < ctx.phi; ++t)
      if (row[t] != 0) acc[t] += (__int128)num_[j] * row[t];
  }
  CyclotomicNumber c = zero(order_);
  c.den_ = den_;
  for (int t = 0; t < ctx.phi; ++t) c.num_[t] = narrow128(acc[t], "conj");
  c.normalize();
  return c;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw InputError("inverse of zero cyclotomic number");
  if (is_rational()) return from_rational(order_, rational_value().inverse());
  // Extended Euclid over Q[x] against Phi_order.
  using RPoly = std::vector<Rational>;
  auto rtrim = [](RPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  const auto& ctx = context(order_);
  RPoly a; // this value as a rational polynomial
  for (long long v : num_) a.push_back(Rational(v, den_));
  rtrim(a);
  RPoly b(ctx.phi + 1, Rational(0)); // Phi reconstructed from rows: x^phi - rows[phi]
  b[ctx.phi] = Rational(1);
  for (int j = 0; j < ctx.phi; ++j) b[j] = Rational(-ctx.rows[ctx.phi][j]);
  // Invariants: a = u * this mod Phi, b = v * this mod Phi (v tracking unused).
  RPoly u{Rational(1)}, v{};
  auto polsub = [&](RPoly& x, const RPoly& y, const Rational& f, int shift) {
    if ((int)x.size() < (int)y.size() + shift) x.resize(y.size() + shift, Rational(0));
    for (size_t i = 0; i < y.size(); ++i) x[i + shift] -= y[i] * f;
    rtrim(x);
  };
  // Divide a polynomial and its Bezout tracker by the polynomial's rational
  // content; this keeps the remainder sequence primitive and prevents the
  // exponential coefficient growth of the naive algorithm.
  auto strip_content = [](RPoly& p, RPoly& tracker) {
    if (p.empty()) return;
    long long num_gcd = 0;
    long long den_lcm = 1;
    for (const auto& c : p) {
      num_gcd = std::gcd(num_gcd, c.num() < 0 ? -c.num() : c.num());
      den_lcm = narrow128((__int128)den_lcm / std::gcd(den_lcm, c.den()) * c.den(),
                          "euclid content");
    }
    if (num_gcd == 0) return;
    Rational content(num_gcd, den_lcm);
    Rational inv = content.inverse();
    for (auto& c : p) c *= inv;
    for (auto& c : tracker) c *= inv;
  };
  while (!b.empty()) {
    if (a.size() < b.size()) {
      std::swap(a, b);
      std::swap(u, v);
    }
    Rational f = a.back() / b.back();
    int shift = (int)a.size() - (int)b.size();
    polsub(a, b, f, shift);
    polsub(u, v, f, shift);
    strip_content(a, u);
  }
  if (a.size() != 1) throw InternalError("cyclotomic element not invertible (degree > 0 gcd)");
  // u * this = a[0] mod Phi  =>  inverse = u / a[0].
  Rational scale = a[0].inverse();
  CyclotomicNumber result = zero(order_);
  CyclotomicNumber x_pow = one(order_);
  CyclotomicNumber zeta = zeta_pow(order_, 1);
  for (size_t i = 0; i < u.size(); ++i) {
    result = result + x_pow * (u[i] * scale);
    x_pow = x_pow * zeta;
  }
  return result;
}

double CyclotomicNumber::to_double_real() const {
  double acc = 0;
  const double w = 2.0 * M_PI / order_;
  for (size_t j = 0; j < num_.size(); ++j)
    acc += double(num_[j]) * std::cos(w * double(j));
  return acc / double(den_);
}

double CyclotomicNumber::to_double_imag() const {
  double acc = 0;
  const double w = 2.0 * M_PI / order_;
  for (size_t j = 0; j < num_.size(); ++j)
    acc += double(num_[j]) * std::sin(w * double(j));
  return acc / double(den_);
}

std::string CyclotomicNumber::str() const {
  std::string s = "[";
  for (size_t i = 0; i < num_.size(); ++i) {
    if (i) s += ",";
    s += Rational(num_[i], den_).str();
  }
  return s + "]@" + std::to_string(order_);
}

size_t CyclotomicNumber::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&](long long v) {
    h ^= (size_t)v;
    h *= 1099511628211ull;
  };
  mix(order_);
  mix(den_);
  for (long long v : num_) mix(v);
  return h;
}

} // namespace pants
