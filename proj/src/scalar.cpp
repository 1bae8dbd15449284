#include "ydelta/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ydelta {

Poly Poly::constant(const Cyclotomic& c) {
  Poly p;
  p.add_term({0, 0}, c);
  return p;
}

Poly Poly::from_rational(const Rational& r) { return constant(Cyclotomic(r)); }

Poly Poly::from_int(long n) { return constant(Cyclotomic(n)); }

Poly Poly::u(int power) {
  assert(power >= 0);
  Poly p;
  p.add_term({power, 0}, Cyclotomic(1));
  return p;
}

Poly Poly::z(int power) {
  assert(power >= 0);
  Poly p;
  p.add_term({0, power}, Cyclotomic(1));
  return p;
}

Poly Poly::monomial(const Cyclotomic& c, int ue, int ze) {
  Poly p;
  p.add_term({ue, ze}, c);
  return p;
}

void Poly::add_term(UZExp e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == UZExp{0, 0} &&
         terms_.begin()->second.is_one();
}

UZExp Poly::leading_exponents() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const Cyclotomic& Poly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1.u + e2.u, e1.z + e2.z}, c1 * c2);
  return r;
}

Poly Poly::scaled(const Cyclotomic& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
  return r;
}

Poly Poly::shifted_down(int ue, int ze) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    assert(e.u >= ue && e.z >= ze);
    r.terms_.emplace(UZExp{e.u - ue, e.z - ze}, c);
  }
  return r;
}

std::complex<double> Poly::eval(std::complex<double> u0, std::complex<double> z0) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_)
    acc += c.eval() * std::pow(u0, e.u) * std::pow(z0, e.z);
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << "(" << it->second.str() << ")";
    if (it->first.u == 1) os << "*u";
    if (it->first.u > 1) os << "*u^" << it->first.u;
    if (it->first.z == 1) os << "*z";
    if (it->first.z > 1) os << "*z^" << it->first.z;
    first = false;
  }
  return os.str();
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero divisor");
  canonicalize();
}

Scalar Scalar::from_int(long n) { return Scalar(Poly::from_int(n)); }

Scalar Scalar::from_rational(const Rational& r) { return Scalar(Poly::from_rational(r)); }

Scalar Scalar::from_cyclo(const Cyclotomic& c) { return Scalar(Poly::constant(c)); }

Scalar Scalar::u(int power) {
  return power >= 0 ? Scalar(Poly::u(power)) : Scalar(Poly::from_int(1), Poly::u(-power));
}

Scalar Scalar::z(int power) {
  return power >= 0 ? Scalar(Poly::z(power)) : Scalar(Poly::from_int(1), Poly::z(-power));
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::from_int(1);
    return;
  }
  // Strip common u/z monomial content.
  int cu = num_.terms().begin()->first.u;
  int cz = num_.terms().begin()->first.z;
  for (const auto& [e, c] : num_.terms()) {
    cu = std::min(cu, e.u);
    cz = std::min(cz, e.z);
  }
  int du = den_.terms().begin()->first.u;
  int dz = den_.terms().begin()->first.z;
  for (const auto& [e, c] : den_.terms()) {
    du = std::min(du, e.u);
    dz = std::min(dz, e.z);
  }
  int su = std::min(cu, du), sz = std::min(cz, dz);
  if (su > 0 || sz > 0) {
    num_ = num_.shifted_down(su, sz);
    den_ = den_.shifted_down(su, sz);
  }
  // Scale so the denominator's leading coefficient is 1.
  const Cyclotomic& lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_one()) return o;
  if (o.is_one()) return *this;
  if (is_zero() || o.is_zero()) return Scalar();
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("zero divisor");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return one();
  Scalar base = *this;
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero divisor");
    base = Scalar(den_, num_);
    e = -e;
  }
  Scalar acc = one();
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

bool Scalar::equals(const Scalar& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::complex<double> Scalar::eval(std::complex<double> u0, std::complex<double> z0) const {
  std::complex<double> d = den_.eval(u0, z0);
  if (std::abs(d) <= 1e-12) throw std::domain_error("singular parameter point");
  return num_.eval(u0, z0) / d;
}

std::string Scalar::str() const {
  if (den_.is_one()) {
    // Constant rationals print bare ("1", "-1/2").
    if (num_.is_zero()) return "0";
    if (num_.terms().size() == 1 && num_.terms().begin()->first == UZExp{0, 0} &&
        num_.terms().begin()->second.is_rational())
      return rational_str(num_.terms().begin()->second.rational_part());
    return num_.str();
  }
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace ydelta
