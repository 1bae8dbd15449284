#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ydelta/cyclotomic.hpp"
#include "ydelta/trace.hpp"

namespace ydelta {

// Residuals of the E-system equations
//   sum_s x_{m+s} x_{d-s} - x_m sum_s x_s x_{d-s}   (1 <= m <= d-1)
// with indices mod d and x_0 = x_d = 1.
std::vector<Cyclotomic> esystem_residual(const std::vector<Cyclotomic>& xs, int d);
std::vector<std::complex<double>> esystem_residual(
    const std::vector<std::complex<double>>& xs, int d);

// A verified solution of the E-system.  Constructors check the residual
// (exactly, or below tol in max-norm for numeric data) and reject candidates
// with vanishing zeta, since the invariant divides by zeta.
class ESolution {
 public:
  enum class Origin { RootsOfUnity, Uniform, Subset, Numeric, Custom };

  // x_i = theta^i.
  static ESolution roots_of_unity(int d);
  // x_i = -(-1)^{i(d-1)} / (d-1); for d = 1 the empty solution.
  static ESolution uniform(int d);
  // x_m = (1/|S|) sum_{s in S} theta^{s m}; verified, rejected on failure.
  static ESolution subset(int d, const std::vector<int>& s);
  static ESolution custom_exact(int d, std::vector<Cyclotomic> xs);
  static ESolution custom_numeric(int d, std::vector<std::complex<double>> xs,
                                  double tol = 1e-10);

  int modulus() const { return d_; }
  bool exact() const { return exact_; }
  Origin origin() const { return origin_; }

  const std::vector<Cyclotomic>& xs() const;
  const std::vector<std::complex<double>>& xs_numeric() const;
  const Cyclotomic& zeta() const;
  std::complex<double> zeta_numeric() const;

  TraceParams trace_params() const;  // exact solutions only
  std::string str() const;

 private:
  ESolution() = default;
  int d_ = 1;
  bool exact_ = true;
  Origin origin_ = Origin::Custom;
  std::vector<Cyclotomic> xs_;
  Cyclotomic zeta_;
  std::vector<std::complex<double>> xs_num_;
  std::complex<double> zeta_num_{1.0, 0.0};

  static ESolution make_exact(int d, std::vector<Cyclotomic> xs, Origin origin);
};

// Newton's method over C^{d-1} from seeded random starts (the two exact
// families are always among the starts), solutions de-duplicated within 1e-6
// and screened for nonzero zeta.  Every returned solution has max-norm
// residual below tol.
std::vector<ESolution> solve_numeric(int d, int attempts = 64, uint64_t seed = 1,
                                     double tol = 1e-10);

}  // namespace ydelta
