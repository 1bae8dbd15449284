#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace ydelta {

// Exact rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_str(const Rational& r);

// Coefficients of the d-th cyclotomic polynomial, c[0] + c[1] x + ... + x^deg,
// computed by exact division of x^d - 1 by the lower-order factors.
std::vector<Rational> cyclotomic_polynomial(int d);

// An element of Q(theta), theta a primitive d-th root of unity, stored in the
// power basis 1, theta, ..., theta^{deg(Phi_d)-1} of Q[x]/(Phi_d).  Every
// operation reduces mod Phi_d, so the coefficient vector is a canonical form
// and equality is component-wise.
//
// Values with modulus 1 are plain rationals; they promote silently when mixed
// with a larger modulus.  Mixing two distinct moduli > 1 is an error.
class Cyclotomic {
 public:
  Cyclotomic();  // zero, modulus 1
  explicit Cyclotomic(const Rational& r);
  explicit Cyclotomic(long n);

  static Cyclotomic zero(int d);
  static Cyclotomic one(int d);
  static Cyclotomic from_rational(const Rational& r, int d);
  // theta^k, k arbitrary (reduced mod d, then mod Phi_d).
  static Cyclotomic theta_power(int d, long k);

  int modulus() const { return d_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;        // lies in Q
  Rational rational_part() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  // Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Numeric value with theta = exp(2*pi*i/d).
  std::complex<double> eval() const;

  // "c0 + c1*θ + ...", coefficients as exact rationals.
  std::string str() const;

 private:
  int d_;
  std::vector<Rational> c_;  // size deg(Phi_d)

  void reduce(std::vector<Rational> raw);  // raw polynomial -> canonical coeffs
  static Cyclotomic promoted(const Cyclotomic& v, int d);
  static int common_modulus(const Cyclotomic& a, const Cyclotomic& b);
};

}  // namespace ydelta
