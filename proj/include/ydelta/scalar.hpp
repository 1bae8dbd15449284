#pragma once

#include <compare>
#include <complex>
#include <map>
#include <string>

#include "ydelta/cyclotomic.hpp"

namespace ydelta {

// Exponent pair of a u^a z^b monomial; ordering is u-major lexicographic.
struct UZExp {
  int u = 0;
  int z = 0;
  auto operator<=>(const UZExp&) const = default;
};

// Sparse polynomial in u and z with cyclotomic coefficients.  Zero
// coefficients are never stored, so the term map is a canonical form.
class Poly {
 public:
  Poly() = default;

  static Poly constant(const Cyclotomic& c);
  static Poly from_rational(const Rational& r);
  static Poly from_int(long n);
  static Poly u(int power = 1);
  static Poly z(int power = 1);
  static Poly monomial(const Cyclotomic& c, int ue, int ze);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<UZExp, Cyclotomic>& terms() const { return terms_; }

  UZExp leading_exponents() const;  // requires nonzero
  const Cyclotomic& leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Poly& o) const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly scaled(const Cyclotomic& c) const;
  // Quotient by u^ue z^ze; every term must be divisible.
  Poly shifted_down(int ue, int ze) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  std::complex<double> eval(std::complex<double> u0, std::complex<double> z0) const;
  std::string str() const;

  void add_term(UZExp e, const Cyclotomic& c);

 private:
  std::map<UZExp, Cyclotomic> terms_;
};

// Quotient of two Polys.  Canonical scaling only: common u/z monomial content
// of numerator and denominator is removed and the denominator's leading
// coefficient is scaled to 1.  No polynomial gcd is attempted; equality is
// decided by cross-multiplication.
class Scalar {
 public:
  Scalar() : num_(), den_(Poly::from_int(1)) {}  // zero
  explicit Scalar(Poly num) : num_(std::move(num)), den_(Poly::from_int(1)) { canonicalize(); }
  Scalar(Poly num, Poly den);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_int(1); }
  static Scalar from_int(long n);
  static Scalar from_rational(const Rational& r);
  static Scalar from_cyclo(const Cyclotomic& c);
  static Scalar u(int power = 1);  // power may be negative
  static Scalar z(int power = 1);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws "zero divisor" on o == 0
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar pow(int e) const;  // negative e inverts; throws on zero base

  // Equality via num1*den2 == num2*den1.
  bool equals(const Scalar& o) const;
  bool operator==(const Scalar& o) const { return equals(o); }

  // Throws std::domain_error("singular parameter point") when the denominator
  // evaluates below 1e-12 in magnitude.
  std::complex<double> eval(std::complex<double> u0, std::complex<double> z0) const;

  std::string str() const;

 private:
  Poly num_, den_;
  void canonicalize();
};

}  // namespace ydelta
