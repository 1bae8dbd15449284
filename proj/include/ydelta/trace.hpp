#pragma once

#include <complex>
#include <map>
#include <vector>

#include "ydelta/algebra.hpp"
#include "ydelta/cyclotomic.hpp"

namespace ydelta {

// Binding of the trace parameters x_1..x_{d-1} (x_0 = x_d = 1 implicit) to
// concrete cyclotomic values; z stays symbolic.  No E-condition is assumed
// here, so deliberately broken parameter sets can be used as controls.
struct TraceParams {
  int d = 1;
  std::vector<Cyclotomic> xs;  // size d-1
  Cyclotomic zeta;             // (1/d) sum_s x_s x_{d-s}, cached

  static TraceParams from_xs(int d, std::vector<Cyclotomic> xs);
  Cyclotomic x(int m) const;  // index taken mod d
};

Cyclotomic zeta_of(const std::vector<Cyclotomic>& xs, int d);

// tr(e_i^{(m)}) = (1/d) sum_s x_{s+m} x_{d-s}.
Cyclotomic zeta_shift(int m, const TraceParams& p);

// Markov trace evaluator with a per-parameter memo over basis monomials;
// reuse one context to share work across related calls.
class TraceContext {
 public:
  explicit TraceContext(TraceParams params);
  const TraceParams& params() const { return params_; }
  Scalar trace(const Element& x);

 private:
  TraceParams params_;
  std::map<Monomial, Scalar> memo_;
  Scalar monomial_trace(const Monomial& m);
};

// One-shot convenience wrapper.
Scalar markov_trace(const Element& x, const TraceParams& p);

// Numeric twin: x's complex, u and z bound to sample values.
struct NumericTraceParams {
  int d = 1;
  std::vector<std::complex<double>> xs;
  std::complex<double> zeta;
  std::complex<double> u0, z0;

  static NumericTraceParams from_xs(int d, std::vector<std::complex<double>> xs,
                                    std::complex<double> u0, std::complex<double> z0);
  std::complex<double> x(int m) const;
};

std::complex<double> markov_trace_numeric(const Element& x, const NumericTraceParams& p);

}  // namespace ydelta
