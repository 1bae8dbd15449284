#include "ydelta/invariant.hpp"

#include <cassert>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ydelta/algebra.hpp"

namespace ydelta {

bool invariant_equal(const InvariantValue& a, const InvariantValue& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.half == b.half && a.f.equals(b.f);
}

InvariantValue shift_half_lambda(const InvariantValue& v, int s, const Scalar& lambda) {
  assert(s == 1 || s == -1);
  InvariantValue r;
  if (s == 1) {
    if (v.half == 0) {
      r = {v.f, 1};
    } else {
      r = {v.f * lambda, 0};
    }
  } else {
    if (v.half == 1) {
      r = {v.f, 0};
    } else {
      r = {v.f / lambda, 1};
    }
  }
  return r;
}

Scalar lambda_scalar(const Cyclotomic& zeta) {
  // (z - (1-u) zeta) / (u z)
  Poly num = Poly::z(1);
  num -= Poly::constant(zeta);
  num += Poly::monomial(zeta, 1, 0);
  Poly den = Poly::u(1) * Poly::z(1);
  return Scalar(std::move(num), std::move(den));
}

DeltaParams DeltaParams::from_solution(const ESolution& sol) {
  if (!sol.exact()) throw std::invalid_argument("numeric solution needs the numeric path");
  DeltaParams p;
  p.trace = sol.trace_params();
  p.lambda = lambda_scalar(p.trace.zeta);
  return p;
}

DeltaParams DeltaParams::from_trace_params(const TraceParams& tp) {
  DeltaParams p;
  p.trace = tp;
  p.lambda = lambda_scalar(tp.zeta);
  return p;
}

namespace {

// Floor division toward minus infinity.
int floor_div2(int k) { return (k >= 0) ? k / 2 : -((-k + 1) / 2); }

}  // namespace

InvariantValue delta(const BraidWord& w, const DeltaParams& params, TraceContext& ctx) {
  Element image = braid_image(w, params.trace.d);
  Scalar t = ctx.trace(image);
  int k = exponent(w) - w.n + 1;
  int half = ((k % 2) + 2) % 2;
  InvariantValue v;
  v.half = half;
  v.f = t * Scalar::z(1 - w.n) * params.lambda.pow(floor_div2(k));
  return v;
}

InvariantValue delta(const BraidWord& w, const DeltaParams& params) {
  TraceContext ctx(params.trace);
  return delta(w, params, ctx);
}

bool skein_check(const BraidWord& beta, int pos, int gen_index, const DeltaParams& params) {
  if (pos < 0 || pos > static_cast<int>(beta.letters.size()))
    throw std::out_of_range("index out of range");
  if (gen_index < 1 || gen_index >= beta.n) throw std::out_of_range("index out of range");
  auto with_letter = [&](LetterKind kind, int sign) {
    BraidWord w = beta;
    w.letters.insert(w.letters.begin() + pos, Letter{kind, gen_index, sign});
    return w;
  };
  TraceContext ctx(params.trace);
  InvariantValue plus = delta(with_letter(LetterKind::Sigma, +1), params, ctx);
  InvariantValue minus = delta(with_letter(LetterKind::Sigma, -1), params, ctx);
  InvariantValue cross = delta(with_letter(LetterKind::Tau, +1), params, ctx);

  InvariantValue lhs_plus = shift_half_lambda(plus, -1, params.lambda);
  InvariantValue lhs_minus = shift_half_lambda(minus, +1, params.lambda);
  assert(lhs_plus.half == lhs_minus.half);
  InvariantValue lhs{lhs_plus.f - lhs_minus.f, lhs_plus.half};

  InvariantValue rhs = shift_half_lambda(cross, -1, params.lambda);
  rhs.f = rhs.f * (Scalar::u(-1) - Scalar::one());

  return invariant_equal(lhs, rhs);
}

namespace {

template <class Params, class Value, class DeltaFn, class EqualFn>
MoveReport run_move_orbit(const BraidWord& start, const Params& params, int rounds,
                          uint64_t seed, DeltaFn compute, EqualFn equal) {
  MoveReport report;
  Value reference = compute(start, params);
  BraidWord w = start;
  std::mt19937_64 eng(seed);
  // Two extra strands keep both stabilization signs in play while the
  // expanded images stay at desk scale.
  int max_n = start.n + 2;
  for (int round = 0; round < rounds; ++round) {
    std::vector<MoveSpec> moves = applicable_moves(w, max_n);
    MoveSpec move = moves[eng() % moves.size()];
    w = apply_move(w, move);
    Value current = compute(w, params);
    if (!equal(current, reference)) {
      report.ok = false;
      report.failed_round = round;
      report.failed_move = move.str();
      std::ostringstream os;
      os << "word " << render_braid(w) << " (n=" << w.n << ")";
      report.detail = os.str();
      return report;
    }
  }
  return report;
}

}  // namespace

MoveReport markov_invariance(const BraidWord& w, const DeltaParams& params, int rounds,
                             uint64_t seed) {
  TraceContext ctx(params.trace);
  return run_move_orbit<DeltaParams, InvariantValue>(
      w, params, rounds, seed,
      [&ctx](const BraidWord& word, const DeltaParams& p) { return delta(word, p, ctx); },
      invariant_equal);
}

NumericDeltaParams NumericDeltaParams::from_solution(const ESolution& sol,
                                                     std::complex<double> u0,
                                                     std::complex<double> z0) {
  return from_xs(sol.modulus(), sol.xs_numeric(), u0, z0);
}

NumericDeltaParams NumericDeltaParams::from_xs(int d, std::vector<std::complex<double>> xs,
                                               std::complex<double> u0,
                                               std::complex<double> z0) {
  NumericDeltaParams p;
  p.trace = NumericTraceParams::from_xs(d, std::move(xs), u0, z0);
  std::complex<double> one(1.0, 0.0);
  p.lambda = (z0 - (one - u0) * p.trace.zeta) / (u0 * z0);
  return p;
}

NumericInvariantValue delta_numeric(const BraidWord& w, const NumericDeltaParams& params) {
  Element image = braid_image(w, params.trace.d);
  std::complex<double> t = markov_trace_numeric(image, params.trace);
  int k = exponent(w) - w.n + 1;
  NumericInvariantValue v;
  v.half = ((k % 2) + 2) % 2;
  v.f = t * std::pow(params.trace.z0, 1 - w.n) *
        std::pow(params.lambda, floor_div2(k));
  return v;
}

bool numeric_invariant_equal(const NumericInvariantValue& a, const NumericInvariantValue& b,
                             double tol) {
  double scale = std::max({1.0, std::abs(a.f), std::abs(b.f)});
  if (std::abs(a.f - b.f) >= tol * scale) return false;
  if (std::abs(a.f) < tol && std::abs(b.f) < tol) return true;
  return a.half == b.half;
}

MoveReport markov_invariance_numeric(const BraidWord& w, const NumericDeltaParams& params,
                                     int rounds, uint64_t seed) {
  return run_move_orbit<NumericDeltaParams, NumericInvariantValue>(
      w, params, rounds, seed,
      [](const BraidWord& word, const NumericDeltaParams& p) {
        return delta_numeric(word, p);
      },
      [](const NumericInvariantValue& a, const NumericInvariantValue& b) {
        return numeric_invariant_equal(a, b);
      });
}

}  // namespace ydelta
