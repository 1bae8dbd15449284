#include "ydelta/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ydelta {

namespace {

using Poly1 = std::vector<Rational>;  // dense univariate, c[i] coeff of x^i

void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Quotient of a by b; remainder must vanish.
Poly1 div_exact(Poly1 a, const Poly1& b) {
  assert(!b.empty());
  trim(a);
  Poly1 q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  assert(a.empty() && "division not exact");
  return q;
}

// Remainder of a mod monic b.
Poly1 mod_monic(Poly1 a, const Poly1& b) {
  assert(!b.empty() && b.back() == 1);
  trim(a);
  while (a.size() >= b.size()) {
    Rational c = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return a;
}

const Poly1& cyclo_cached(int d) {
  static std::map<int, Poly1> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
  std::function<Poly1(int)> compute = [&](int n) -> Poly1 {
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    Poly1 num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (int e = 1; e < n; ++e)
      if (n % e == 0) num = div_exact(num, compute(e));
    cache[n] = num;
    return num;
  };
  compute(d);
  return cache.at(d);
}

}  // namespace

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::vector<Rational> cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
  return cyclo_cached(d);
}

Cyclotomic::Cyclotomic() : d_(1), c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& r) : d_(1), c_(1, r) {}

Cyclotomic::Cyclotomic(long n) : d_(1), c_(1, Rational(n)) {}

Cyclotomic Cyclotomic::zero(int d) {
  Cyclotomic v;
  v.d_ = d;
  v.c_.assign(cyclo_cached(d).size() - 1, Rational(0));
  return v;
}

Cyclotomic Cyclotomic::one(int d) { return from_rational(Rational(1), d); }

Cyclotomic Cyclotomic::from_rational(const Rational& r, int d) {
  Cyclotomic v = zero(d);
  v.c_[0] = r;
  return v;
}

Cyclotomic Cyclotomic::theta_power(int d, long k) {
  long e = ((k % d) + d) % d;
  Cyclotomic v = zero(d);
  std::vector<Rational> raw(static_cast<size_t>(e) + 1, Rational(0));
  raw[static_cast<size_t>(e)] = 1;
  v.reduce(std::move(raw));
  return v;
}

void Cyclotomic::reduce(std::vector<Rational> raw) {
  const Poly1& phi = cyclo_cached(d_);
  Poly1 rem = mod_monic(std::move(raw), phi);
  c_.assign(phi.size() - 1, Rational(0));
  for (size_t i = 0; i < rem.size(); ++i) c_[i] = rem[i];
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::domain_error("not a rational value");
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(const Cyclotomic& v, int d) {
  if (v.d_ == d) return v;
  assert(v.d_ == 1);
  Cyclotomic r = zero(d);
  r.c_[0] = v.c_[0];
  return r;
}

int Cyclotomic::common_modulus(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.d_ == b.d_) return a.d_;
  if (a.d_ == 1) return b.d_;
  if (b.d_ == 1) return a.d_;
  throw std::invalid_argument("cyclotomic modulus mismatch");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (d_ == o.d_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  if (o.d_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  int d = common_modulus(*this, o);
  *this = promoted(*this, d);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (d_ == o.d_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  if (o.d_ == 1) {
    c_[0] -= o.c_[0];
    return *this;
  }
  int d = common_modulus(*this, o);
  *this = promoted(*this, d);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  // Rational factors scale coefficients directly.
  if (o.is_rational()) {
    const Rational& f = o.c_[0];
    if (f == 0) {
      *this = zero(d_);
      return *this;
    }
    for (auto& c : c_) c *= f;
    return *this;
  }
  if (is_rational()) {
    Rational f = c_[0];
    *this = o;
    for (auto& c : c_) c *= f;
    return *this;
  }
  int d = common_modulus(*this, o);
  reduce(mul(c_, o.c_));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  if (d_ == 1) {
    Cyclotomic r;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Extended Euclid in Q[x]: s*a + t*Phi_d = gcd = const, so a^{-1} = s/gcd.
  Poly1 r0 = cyclo_cached(d_);
  Poly1 r1 = c_;
  trim(r1);
  Poly1 s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    assert(!r1.empty() && "gcd with irreducible modulus cannot vanish");
    // r0 = q*r1 + rem
    Poly1 rem = r0;
    Poly1 q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
    while (rem.size() >= r1.size()) {
      Rational c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    Poly1 s2 = s0;  // s2 = s0 - q*s1
    Poly1 qs = mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational g = r1[0];
  Cyclotomic out = zero(d_);
  Poly1 inv = s1;
  for (auto& c : inv) c /= g;
  out.reduce(std::move(inv));
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (d_ == o.d_) return c_ == o.c_;
  int d = common_modulus(*this, o);
  if (d_ == 1 || o.d_ == 1) {
    const Cyclotomic& wide = (d_ == 1) ? o : *this;
    const Cyclotomic& narrow = (d_ == 1) ? *this : o;
    if (!wide.is_rational()) return false;
    return wide.c_[0] == narrow.c_[0];
  }
  return promoted(*this, d).c_ == promoted(o, d).c_;
}

std::complex<double> Cyclotomic::eval() const {
  std::complex<double> theta = std::polar(1.0, 2.0 * M_PI / static_cast<double>(d_));
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * theta + c_[i].get_d();
  return acc;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (any) os << " + ";
    os << c_[i].get_str();
    if (i == 1) os << "*θ";
    if (i > 1) os << "*θ^" << i;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace ydelta
