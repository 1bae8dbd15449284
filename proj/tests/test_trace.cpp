#include <doctest.h>

#include "ydelta/checks.hpp"
#include "ydelta/esystem.hpp"
#include "ydelta/trace.hpp"

using namespace ydelta;

namespace {

Scalar z() { return Scalar::z(1); }

}  // namespace

TEST_SUITE("trace") {

TEST_CASE("trace rules on small elements") {
  for (int d : {1, 2, 3}) {
    for (auto sol : {ESolution::roots_of_unity(d), ESolution::uniform(d)}) {
      TraceParams params = sol.trace_params();
      Scalar zeta = Scalar::from_cyclo(params.zeta);

      CHECK(markov_trace(Element::identity(d, 2), params).equals(Scalar::one()));
      CHECK(markov_trace(braid_generator(d, 2, 1), params).equals(z()));
      CHECK(markov_trace(framing_idempotent(d, 2, 1), params).equals(zeta));
      // tr(e_1 g_1) = z
      Element eg = framing_idempotent(d, 2, 1).right_mul_g(1);
      CHECK(markov_trace(eg, params).equals(z()));
      // tr(p_1) = zeta - z
      CHECK(markov_trace(singular_element(d, 2, 1), params).equals(zeta - z()));
    }
  }
}

TEST_CASE("zeta shifts") {
  // roots of unity: zeta = 1
  for (int d = 1; d <= 6; ++d) {
    TraceParams params = ESolution::roots_of_unity(d).trace_params();
    CHECK(zeta_shift(0, params) == Cyclotomic(1));
  }
  // d=3 uniform: zeta = (1/3)(1 + 2*(1/4)) = 1/2
  TraceParams uni = ESolution::uniform(3).trace_params();
  CHECK(zeta_shift(0, uni) == Cyclotomic(make_rational(1, 2)));
  // d=1: empty product convention
  TraceParams one = ESolution::uniform(1).trace_params();
  CHECK(zeta_shift(0, one) == Cyclotomic(1));

  // zeta_shift(m) = tr(e_i^{(m)}) for all valid i, m
  for (int d : {2, 3}) {
    TraceParams params = ESolution::roots_of_unity(d).trace_params();
    for (int n : {2, 3}) {
      TraceContext ctx(params);
      for (int i = 1; i < n; ++i)
        for (int m = 0; m < d; ++m)
          CHECK(ctx.trace(framing_idempotent(d, n, i, m))
                    .equals(Scalar::from_cyclo(zeta_shift(m, params))));
    }
  }
}

TEST_CASE("conjugation invariance on random pairs") {
  for (int d : {2, 3}) {
    TraceParams params = ESolution::uniform(d).trace_params();
    for (int n : {2, 3, 4}) {
      TraceContext ctx(params);
      ElementSampler sampler(d, n, 500 + 10 * d + n);
      for (int rep = 0; rep < 5; ++rep) {
        Element a = sampler.next(2);
        Element b = sampler.next(2);
        CHECK(ctx.trace(a.mul(b)).equals(ctx.trace(b.mul(a))));
      }
    }
  }
}

TEST_CASE("markov and framing rules") {
  for (int d : {1, 2, 3}) {
    TraceParams params = ESolution::roots_of_unity(d).trace_params();
    TraceContext ctx(params);
    ElementSampler sampler(d, 3, 99 + d);
    for (int rep = 0; rep < 5; ++rep) {
      Element x = sampler.next(2).embedded(4);
      Scalar base = ctx.trace(x);
      CHECK(ctx.trace(x.right_mul_g(3)).equals(z() * base));
      for (int m = 0; m < d; ++m)
        CHECK(ctx.trace(x.right_mul_t(4, m))
                  .equals(Scalar::from_cyclo(params.x(m)) * base));
    }
  }
}

TEST_CASE("E-condition gives multiplicative idempotent traces") {
  for (int d : {2, 3}) {
    for (auto sol : {ESolution::roots_of_unity(d), ESolution::uniform(d)}) {
      TraceParams params = sol.trace_params();
      Scalar zeta = Scalar::from_cyclo(params.zeta);
      TraceContext ctx(params);
      ElementSampler sampler(d, 2, 7 * d);
      for (int rep = 0; rep < 5; ++rep) {
        Element x = sampler.next(2).embedded(3);
        Scalar base = ctx.trace(x);
        CHECK(ctx.trace(x.mul(framing_idempotent(d, 3, 2))).equals(zeta * base));
        CHECK(ctx.trace(x.mul(singular_element(d, 3, 2))).equals((zeta - z()) * base));
      }
    }
  }
}

TEST_CASE("negative control: without the E-condition the product rule fails") {
  // d=3, x1 = x2 = 1/3 violates the E-system.
  std::vector<Cyclotomic> xs{Cyclotomic(make_rational(1, 3)),
                             Cyclotomic(make_rational(1, 3))};
  TraceParams params = TraceParams::from_xs(3, xs);
  CHECK(params.zeta == Cyclotomic(make_rational(11, 27)));

  // Witness: x = t_2 in Y_{3,2} embedded, against e_2.
  Element witness = Element::identity(3, 3).right_mul_t(2, 1);
  TraceContext ctx(params);
  Scalar lhs = ctx.trace(witness.mul(framing_idempotent(3, 3, 2)));
  Scalar rhs = Scalar::from_cyclo(params.zeta) * ctx.trace(witness);
  CHECK(!lhs.equals(rhs));

  // tr(ab) = tr(ba) still holds; conjugation needs no E-condition.
  ElementSampler sampler(3, 3, 4242);
  for (int rep = 0; rep < 3; ++rep) {
    Element a = sampler.next(2);
    Element b = sampler.next(2);
    CHECK(ctx.trace(a.mul(b)).equals(ctx.trace(b.mul(a))));
  }
}

TEST_CASE("numeric trace matches exact evaluation") {
  std::complex<double> u0(0.62, 0.31), z0(0.47, -0.23);
  for (int d : {2, 3}) {
    ESolution sol = ESolution::roots_of_unity(d);
    TraceParams params = sol.trace_params();
    NumericTraceParams nparams =
        NumericTraceParams::from_xs(d, sol.xs_numeric(), u0, z0);
    ElementSampler sampler(d, 3, 31 + d);
    for (int rep = 0; rep < 4; ++rep) {
      Element x = sampler.next(2);
      std::complex<double> exact = markov_trace(x, params).eval(u0, z0);
      std::complex<double> numeric = markov_trace_numeric(x, nparams);
      CHECK(std::abs(exact - numeric) < 1e-9);
    }
  }
}

}  // TEST_SUITE
