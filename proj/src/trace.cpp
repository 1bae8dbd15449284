#include "ydelta/trace.hpp"

#include <cassert>
#include <stdexcept>

namespace ydelta {

namespace {

// Splits a basis monomial over n strands whose braid part moves n:
// t^a g_w = X g_{n-1} Y with X, Y over n-1 strands, so that
// tr(t^a g_w) = z tr(Y X).
struct SplitParts {
  Monomial x, y;
};

SplitParts split_monomial(const Monomial& mono) {
  int n = mono.perm.size();
  int m = mono.perm.inverse_image(n);
  assert(m < n);
  SplitParts parts;
  parts.x.framing.assign(mono.framing.begin(), mono.framing.end() - 1);
  parts.x.perm = mono.perm.top_factor();
  // Y = t_{n-1}^{a_n} g_{n-2} ... g_m, the tail of the staircase block.
  parts.y.framing.assign(n - 1, 0);
  parts.y.framing[n - 2] = mono.framing[n - 1];
  std::vector<int> img(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    if (j < m)
      img[j - 1] = j;
    else if (j == m)
      img[j - 1] = n - 1;
    else
      img[j - 1] = j - 1;
  }
  parts.y.perm = Perm(std::move(img));
  return parts;
}

}  // namespace

TraceParams TraceParams::from_xs(int d, std::vector<Cyclotomic> xs) {
  if (static_cast<int>(xs.size()) != d - 1)
    throw std::invalid_argument("xs must have d-1 entries");
  TraceParams p;
  p.d = d;
  p.zeta = zeta_of(xs, d);
  p.xs = std::move(xs);
  return p;
}

Cyclotomic TraceParams::x(int m) const {
  int idx = ((m % d) + d) % d;
  return idx == 0 ? Cyclotomic(1) : xs[idx - 1];
}

Cyclotomic zeta_of(const std::vector<Cyclotomic>& xs, int d) {
  auto x = [&](int m) {
    int idx = ((m % d) + d) % d;
    return idx == 0 ? Cyclotomic(1) : xs[idx - 1];
  };
  Cyclotomic acc;
  for (int s = 0; s < d; ++s) acc += x(s) * x(d - s);
  return acc * Cyclotomic(make_rational(1, d));
}

Cyclotomic zeta_shift(int m, const TraceParams& p) {
  Cyclotomic acc;
  for (int s = 0; s < p.d; ++s) acc += p.x(s + m) * p.x(p.d - s);
  return acc * Cyclotomic(make_rational(1, p.d));
}

TraceContext::TraceContext(TraceParams params) : params_(std::move(params)) {}

Scalar TraceContext::trace(const Element& x) {
  if (x.modulus() != params_.d) throw std::invalid_argument("ambient mismatch");
  Scalar acc = Scalar::zero();
  for (const auto& [m, c] : x.terms()) acc += c * monomial_trace(m);
  return acc;
}

Scalar TraceContext::monomial_trace(const Monomial& mono) {
  int n = static_cast<int>(mono.framing.size());
  if (n == 1) return Scalar::from_cyclo(params_.x(mono.framing[0]));
  auto hit = memo_.find(mono);
  if (hit != memo_.end()) return hit->second;

  Scalar result;
  if (mono.perm(n) == n) {
    // The top strand is untouched: strip it against the framing rule.
    Monomial sub;
    sub.framing.assign(mono.framing.begin(), mono.framing.end() - 1);
    sub.perm = mono.perm.restricted();
    result = Scalar::from_cyclo(params_.x(mono.framing[n - 1])) * monomial_trace(sub);
  } else {
    SplitParts parts = split_monomial(mono);
    Element prod = Element::from_monomial(params_.d, n - 1, parts.y)
                       .mul(Element::from_monomial(params_.d, n - 1, parts.x));
    Scalar inner = Scalar::zero();
    for (const auto& [m, c] : prod.terms()) inner += c * monomial_trace(m);
    result = Scalar::z(1) * inner;
  }
  memo_.emplace(mono, result);
  return result;
}

Scalar markov_trace(const Element& x, const TraceParams& p) {
  TraceContext ctx(p);
  return ctx.trace(x);
}

NumericTraceParams NumericTraceParams::from_xs(int d, std::vector<std::complex<double>> xs,
                                               std::complex<double> u0,
                                               std::complex<double> z0) {
  if (static_cast<int>(xs.size()) != d - 1)
    throw std::invalid_argument("xs must have d-1 entries");
  NumericTraceParams p;
  p.d = d;
  p.xs = std::move(xs);
  p.u0 = u0;
  p.z0 = z0;
  std::complex<double> acc(0.0, 0.0);
  auto x = [&](int m) {
    int idx = ((m % d) + d) % d;
    return idx == 0 ? std::complex<double>(1.0, 0.0) : p.xs[idx - 1];
  };
  for (int s = 0; s < d; ++s) acc += x(s) * x(d - s);
  p.zeta = acc / static_cast<double>(d);
  return p;
}

std::complex<double> NumericTraceParams::x(int m) const {
  int idx = ((m % d) + d) % d;
  return idx == 0 ? std::complex<double>(1.0, 0.0) : xs[idx - 1];
}

namespace {

class NumericTraceEval {
 public:
  explicit NumericTraceEval(const NumericTraceParams& p) : p_(p) {}

  std::complex<double> trace(const Element& x) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : x.terms())
      acc += c.eval(p_.u0, p_.z0) * monomial_trace(m);
    return acc;
  }

 private:
  const NumericTraceParams& p_;
  std::map<Monomial, std::complex<double>> memo_;

  std::complex<double> monomial_trace(const Monomial& mono) {
    int n = static_cast<int>(mono.framing.size());
    if (n == 1) return p_.x(mono.framing[0]);
    auto hit = memo_.find(mono);
    if (hit != memo_.end()) return hit->second;

    std::complex<double> result;
    if (mono.perm(n) == n) {
      Monomial sub;
      sub.framing.assign(mono.framing.begin(), mono.framing.end() - 1);
      sub.perm = mono.perm.restricted();
      result = p_.x(mono.framing[n - 1]) * monomial_trace(sub);
    } else {
      SplitParts parts = split_monomial(mono);
      Element prod = Element::from_monomial(p_.d, n - 1, parts.y)
                         .mul(Element::from_monomial(p_.d, n - 1, parts.x));
      std::complex<double> inner(0.0, 0.0);
      for (const auto& [m, c] : prod.terms())
        inner += c.eval(p_.u0, p_.z0) * monomial_trace(m);
      result = p_.z0 * inner;
    }
    memo_.emplace(mono, result);
    return result;
  }
};

}  // namespace

std::complex<double> markov_trace_numeric(const Element& x, const NumericTraceParams& p) {
  if (x.modulus() != p.d) throw std::invalid_argument("ambient mismatch");
  NumericTraceEval eval(p);
  return eval.trace(x);
}

}  // namespace ydelta
