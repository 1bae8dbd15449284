#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "ydelta/braid.hpp"
#include "ydelta/esystem.hpp"
#include "ydelta/trace.hpp"

namespace ydelta {

// Value of the invariant: a Scalar times lambda^{half/2}, half in {0,1}.
// Integer powers of lambda live inside f; the sole possible half power is
// tracked by parity instead of choosing a square-root branch.
struct InvariantValue {
  Scalar f;
  int half = 0;

  bool is_zero() const { return f.is_zero(); }
};

bool invariant_equal(const InvariantValue& a, const InvariantValue& b);

// Multiply by lambda^{s/2}, s = +1 or -1.
InvariantValue shift_half_lambda(const InvariantValue& v, int s, const Scalar& lambda);

struct DeltaParams {
  TraceParams trace;
  Scalar lambda;  // (z - (1-u) zeta) / (u z)

  static DeltaParams from_solution(const ESolution& sol);       // verified, exact
  static DeltaParams from_trace_params(const TraceParams& tp);  // controls, unverified
};

// lambda for a given zeta, as an exact Scalar.
Scalar lambda_scalar(const Cyclotomic& zeta);

// Delta(closure of w) = z^{1-n} (sqrt(lambda))^{e(w)-n+1} tr(delta(w)).
InvariantValue delta(const BraidWord& w, const DeltaParams& params);
InvariantValue delta(const BraidWord& w, const DeltaParams& params, TraceContext& ctx);

// Skein relation at one site: beta with sigma_i / sigma_i^{-1} / tau_i
// inserted at letter position pos; true iff
// lambda^{-1/2} Delta(L+) - lambda^{1/2} Delta(L-) =
// (u^{-1}-1) lambda^{-1/2} Delta(Lx) exactly.
bool skein_check(const BraidWord& beta, int pos, int gen_index, const DeltaParams& params);

struct MoveReport {
  bool ok = true;
  int failed_round = -1;
  std::string failed_move;
  std::string detail;
};

// Applies `rounds` random moves from the singular Markov move set,
// recomputing Delta after each; reports the first mismatch.
MoveReport markov_invariance(const BraidWord& w, const DeltaParams& params, int rounds,
                             uint64_t seed);

// Numeric twins used for solutions given as complex values.
struct NumericDeltaParams {
  NumericTraceParams trace;
  std::complex<double> lambda;

  static NumericDeltaParams from_solution(const ESolution& sol, std::complex<double> u0,
                                          std::complex<double> z0);
  static NumericDeltaParams from_xs(int d, std::vector<std::complex<double>> xs,
                                    std::complex<double> u0, std::complex<double> z0);
};

struct NumericInvariantValue {
  std::complex<double> f{0.0, 0.0};
  int half = 0;
};

NumericInvariantValue delta_numeric(const BraidWord& w, const NumericDeltaParams& params);
bool numeric_invariant_equal(const NumericInvariantValue& a, const NumericInvariantValue& b,
                             double tol = 1e-8);
MoveReport markov_invariance_numeric(const BraidWord& w, const NumericDeltaParams& params,
                                     int rounds, uint64_t seed);

}  // namespace ydelta
