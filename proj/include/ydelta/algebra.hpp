#pragma once

#include <map>
#include <string>
#include <vector>

#include "ydelta/braid.hpp"
#include "ydelta/permutation.hpp"
#include "ydelta/scalar.hpp"

namespace ydelta {

// Basis monomial t_1^{a_1} ... t_n^{a_n} g_w of Y_{d,n}(u): framing exponents
// on the left, then the braid part along the canonical staircase word of w.
struct Monomial {
  std::vector<int> framing;  // size n, entries in [0, d)
  Perm perm;

  bool operator==(const Monomial& o) const {
    return framing == o.framing && perm == o.perm;
  }
  bool operator<(const Monomial& o) const {
    if (framing != o.framing) return framing < o.framing;
    return perm < o.perm;
  }
};

// Finite linear combination of monomials with Scalar coefficients.  Zero
// coefficients are never stored.  Products are evaluated by pushing framing
// generators left through the braid part (g_w t_j = t_{w(j)} g_w) and by the
// quadratic relation when a right descent is hit.
class Element {
 public:
  Element(int d, int n);  // zero element
  static Element identity(int d, int n);
  static Element from_monomial(int d, int n, Monomial m, Scalar coeff = Scalar::one());

  int modulus() const { return d_; }
  int strands() const { return n_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Scalar& coeff);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element scaled(const Scalar& c) const;

  // Right multiplication by t_j^power (1 <= j <= n).
  Element right_mul_t(int j, int power) const;
  // Right multiplication by g_i or g_i^{-1} (1 <= i <= n-1).
  Element right_mul_g(int i) const;
  Element right_mul_g_inv(int i) const;
  // Right multiplication by e_i = (1/d) sum_m t_i^m t_{i+1}^{-m}.
  Element right_mul_e(int i) const;

  // Bilinear product; ambients must match.
  Element mul(const Element& o) const;

  // Same terms with equal coefficients (cross-multiplication equality).
  bool equals(const Element& o) const;

  Element embedded(int n) const;  // extend the ambient strand count

  std::string str() const;  // diagnostic rendering

 private:
  int d_, n_;
  std::map<Monomial, Scalar> terms_;

  void check_g_index(int i) const;
};

// e_i^{(m)} = (1/d) sum_s t_i^{m+s} t_{i+1}^{-s}; e_i = e_i^{(0)}.
Element framing_idempotent(int d, int n, int i, int m = 0);

// p_i = e_i (1 - g_i), the image of the singular crossing tau_i.
Element singular_element(int d, int n, int i);

// g_i as an Element (sign -1 gives the inverse).
Element braid_generator(int d, int n, int i, int sign = +1);

// Closed form for g_i^m via the geometric sums in u^2; independent of the
// multiplication path, so it doubles as an oracle for right_mul_g.
Element crossing_power(int d, int n, int i, int m);

// The monoid homomorphism sigma_i -> g_i, tau_i -> p_i applied to a word.
Element braid_image(const BraidWord& w, int d);

}  // namespace ydelta
