#include "ydelta/algebra.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ydelta {

Element::Element(int d, int n) : d_(d), n_(n) {
  if (d < 1 || n < 1) throw std::invalid_argument("invalid ambient (d, n)");
}

Element Element::identity(int d, int n) {
  Element e(d, n);
  e.add_term({std::vector<int>(n, 0), Perm::identity(n)}, Scalar::one());
  return e;
}

Element Element::from_monomial(int d, int n, Monomial m, Scalar coeff) {
  Element e(d, n);
  assert(static_cast<int>(m.framing.size()) == n && m.perm.size() == n);
  e.add_term(m, coeff);
  return e;
}

void Element::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  assert(d_ == o.d_ && n_ == o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  assert(d_ == o.d_ && n_ == o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::scaled(const Scalar& c) const {
  if (c.is_one()) return *this;
  Element r(d_, n_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

void Element::check_g_index(int i) const {
  if (i < 1 || i > n_ - 1) throw std::out_of_range("index out of range");
}

Element Element::right_mul_t(int j, int power) const {
  if (j < 1 || j > n_) throw std::out_of_range("index out of range");
  Element r(d_, n_);
  for (const auto& [m, c] : terms_) {
    Monomial out = m;
    // t^a g_w t_j = t^a t_{w(j)} g_w
    int pos = m.perm(j) - 1;
    out.framing[pos] = ((out.framing[pos] + power) % d_ + d_) % d_;
    r.add_term(out, c);
  }
  return r;
}

Element Element::right_mul_g(int i) const {
  check_g_index(i);
  Element r(d_, n_);
  const Scalar u_minus_1_over_d =
      (Scalar::u(1) - Scalar::one()) * Scalar::from_rational(make_rational(1, d_));
  for (const auto& [m, c] : terms_) {
    const Perm& w = m.perm;
    if (w(i) < w(i + 1)) {
      // length goes up: g_w g_i = g_{w s_i}
      r.add_term({m.framing, w.right_mul_s(i)}, c);
    } else {
      // descent: g_w g_i = g_v g_i^2 with v = w s_i, then the quadratic
      // relation g_i^2 = 1 + (u-1) e_i - (u-1) e_i g_i, all framings pushed
      // to the left through g_v.
      Perm v = w.right_mul_s(i);
      r.add_term({m.framing, v}, c);
      Scalar q = c * u_minus_1_over_d;
      int pa = v(i) - 1, pb = v(i + 1) - 1;
      for (int k = 0; k < d_; ++k) {
        Monomial shifted{m.framing, v};
        shifted.framing[pa] = (shifted.framing[pa] + k) % d_;
        shifted.framing[pb] = ((shifted.framing[pb] - k) % d_ + d_) % d_;
        r.add_term(shifted, q);
        shifted.perm = w;
        r.add_term(shifted, -q);
      }
    }
  }
  return r;
}

Element Element::right_mul_e(int i) const {
  check_g_index(i);
  Element r(d_, n_);
  Scalar inv_d = Scalar::from_rational(make_rational(1, d_));
  for (const auto& [m, c] : terms_) {
    Scalar q = c * inv_d;
    int pa = m.perm(i) - 1, pb = m.perm(i + 1) - 1;
    for (int k = 0; k < d_; ++k) {
      Monomial out = m;
      out.framing[pa] = (out.framing[pa] + k) % d_;
      out.framing[pb] = ((out.framing[pb] - k) % d_ + d_) % d_;
      r.add_term(out, q);
    }
  }
  return r;
}

Element Element::right_mul_g_inv(int i) const {
  check_g_index(i);
  // g_i^{-1} = g_i - (u^{-1}-1) e_i + (u^{-1}-1) e_i g_i
  const Scalar coeff = Scalar::u(-1) - Scalar::one();
  const Scalar inv_d = Scalar::from_rational(make_rational(1, d_));
  Element r(d_, n_);
  for (const auto& [m, c] : terms_) {
    const Perm& w = m.perm;
    if (w(i) > w(i + 1)) {
      // descent: g_w = g_{w s_i} g_i, so the inverse cancels to one monomial
      r.add_term({m.framing, w.right_mul_s(i)}, c);
      continue;
    }
    // ascent: expand the inverse formula; e_i only shifts framings, so each
    // of its d summands keeps the ascent and multiplies by g_i cleanly.
    Perm ws = w.right_mul_s(i);
    r.add_term({m.framing, ws}, c);
    Scalar q = c * coeff * inv_d;
    int pa = w(i) - 1, pb = w(i + 1) - 1;
    for (int k = 0; k < d_; ++k) {
      Monomial shifted{m.framing, w};
      shifted.framing[pa] = (shifted.framing[pa] + k) % d_;
      shifted.framing[pb] = ((shifted.framing[pb] - k) % d_ + d_) % d_;
      r.add_term(shifted, -q);
      shifted.perm = ws;
      r.add_term(shifted, q);
    }
  }
  return r;
}

Element Element::mul(const Element& o) const {
  if (d_ != o.d_ || n_ != o.n_) throw std::invalid_argument("ambient mismatch");
  Element acc(d_, n_);
  for (const auto& [m, c] : o.terms_) {
    Element part = scaled(c);
    for (int j = 1; j <= n_; ++j)
      if (m.framing[j - 1] != 0) part = part.right_mul_t(j, m.framing[j - 1]);
    for (int i : m.perm.staircase_word()) part = part.right_mul_g(i);
    acc += part;
  }
  return acc;
}

bool Element::equals(const Element& o) const {
  if (d_ != o.d_ || n_ != o.n_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (!it->second.equals(jt->second)) return false;
  }
  return true;
}

Element Element::embedded(int n) const {
  assert(n >= n_);
  Element r(d_, n);
  for (const auto& [m, c] : terms_) {
    Monomial out;
    out.framing = m.framing;
    out.framing.resize(n, 0);
    out.perm = m.perm.extended(n);
    r.add_term(out, c);
  }
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    for (size_t j = 0; j < m.framing.size(); ++j)
      if (m.framing[j] != 0) os << " * t" << (j + 1) << "^" << m.framing[j];
    if (!m.perm.is_identity()) os << " * g" << m.perm.str();
    first = false;
  }
  return os.str();
}

Element framing_idempotent(int d, int n, int i, int m) {
  if (i < 1 || i > n - 1) throw std::out_of_range("index out of range");
  Element r(d, n);
  Scalar inv_d = Scalar::from_rational(make_rational(1, d));
  for (int s = 0; s < d; ++s) {
    std::vector<int> framing(n, 0);
    framing[i - 1] = ((m + s) % d + d) % d;
    framing[i] = (d - s) % d;
    r.add_term({framing, Perm::identity(n)}, inv_d);
  }
  return r;
}

Element singular_element(int d, int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("index out of range");
  Element r(d, n);
  Scalar inv_d = Scalar::from_rational(make_rational(1, d));
  Perm id = Perm::identity(n);
  Perm si = id.right_mul_s(i);
  for (int s = 0; s < d; ++s) {
    std::vector<int> framing(n, 0);
    framing[i - 1] = s;
    framing[i] = (d - s) % d;
    r.add_term({framing, id}, inv_d);
    r.add_term({framing, si}, -inv_d);
  }
  return r;
}

Element braid_generator(int d, int n, int i, int sign) {
  Element id = Element::identity(d, n);
  return sign >= 0 ? id.right_mul_g(i) : id.right_mul_g_inv(i);
}

Element crossing_power(int d, int n, int i, int m) {
  if (i < 1 || i > n - 1) throw std::out_of_range("index out of range");
  Element one = Element::identity(d, n);
  if (m == 0) return one;
  Element p = singular_element(d, n, i);
  Scalar u = Scalar::u(1);
  Scalar u_inv = Scalar::u(-1);
  auto geometric = [](const Scalar& ratio, int k) {
    Scalar acc = Scalar::zero();
    Scalar pow = Scalar::one();
    for (int l = 0; l < k; ++l) {
      acc += pow;
      pow = pow * ratio;
    }
    return acc;
  };
  if (m > 0 && m % 2 == 0) {
    Scalar alpha = (u - Scalar::one()) * geometric(u * u, m / 2);
    return one + p.scaled(alpha);
  }
  if (m > 0) {
    Scalar beta = u * (u - Scalar::one()) * geometric(u * u, (m - 1) / 2);
    return braid_generator(d, n, i) + p.scaled(-beta);
  }
  if (m % 2 == 0) {
    Scalar alpha = u_inv * (u_inv - Scalar::one()) * geometric(u_inv * u_inv, -m / 2);
    return one + p.scaled(alpha);
  }
  Scalar beta = (u_inv - Scalar::one()) * geometric(u_inv * u_inv, (1 - m) / 2);
  return braid_generator(d, n, i) + p.scaled(-beta);
}

Element braid_image(const BraidWord& w, int d) {
  Element acc = Element::identity(d, w.n);
  for (const Letter& l : w.letters) {
    switch (l.kind) {
      case LetterKind::Sigma:
        acc = l.sign > 0 ? acc.right_mul_g(l.index) : acc.right_mul_g_inv(l.index);
        break;
      case LetterKind::Tau:
        acc = acc.mul(singular_element(d, w.n, l.index));
        break;
    }
  }
  return acc;
}

}  // namespace ydelta

