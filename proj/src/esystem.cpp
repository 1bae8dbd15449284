#include "ydelta/esystem.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ydelta {

namespace {

template <class V>
V index_value(const std::vector<V>& xs, int d, int m, const V& one) {
  int idx = ((m % d) + d) % d;
  return idx == 0 ? one : xs[idx - 1];
}

}  // namespace

std::vector<Cyclotomic> esystem_residual(const std::vector<Cyclotomic>& xs, int d) {
  assert(static_cast<int>(xs.size()) == d - 1);
  Cyclotomic one(1);
  auto x = [&](int m) { return index_value(xs, d, m, one); };
  Cyclotomic a0;
  for (int s = 0; s < d; ++s) a0 += x(s) * x(d - s);
  std::vector<Cyclotomic> res;
  for (int m = 1; m < d; ++m) {
    Cyclotomic am;
    for (int s = 0; s < d; ++s) am += x(m + s) * x(d - s);
    res.push_back(am - x(m) * a0);
  }
  return res;
}

std::vector<std::complex<double>> esystem_residual(
    const std::vector<std::complex<double>>& xs, int d) {
  assert(static_cast<int>(xs.size()) == d - 1);
  std::complex<double> one(1.0, 0.0);
  auto x = [&](int m) { return index_value(xs, d, m, one); };
  std::complex<double> a0(0.0, 0.0);
  for (int s = 0; s < d; ++s) a0 += x(s) * x(d - s);
  std::vector<std::complex<double>> res;
  for (int m = 1; m < d; ++m) {
    std::complex<double> am(0.0, 0.0);
    for (int s = 0; s < d; ++s) am += x(m + s) * x(d - s);
    res.push_back(am - x(m) * a0);
  }
  return res;
}

ESolution ESolution::make_exact(int d, std::vector<Cyclotomic> xs, Origin origin) {
  for (const auto& r : esystem_residual(xs, d))
    if (!r.is_zero()) throw std::domain_error("not an E-solution");
  ESolution sol;
  sol.d_ = d;
  sol.exact_ = true;
  sol.origin_ = origin;
  sol.zeta_ = zeta_of(xs, d);
  if (sol.zeta_.is_zero()) throw std::domain_error("zeta vanishes");
  sol.xs_ = std::move(xs);
  sol.zeta_num_ = sol.zeta_.eval();
  sol.xs_num_.reserve(sol.xs_.size());
  for (const auto& x : sol.xs_) sol.xs_num_.push_back(x.eval());
  return sol;
}

ESolution ESolution::roots_of_unity(int d) {
  std::vector<Cyclotomic> xs;
  for (int i = 1; i < d; ++i) xs.push_back(Cyclotomic::theta_power(d, i));
  return make_exact(d, std::move(xs), Origin::RootsOfUnity);
}

ESolution ESolution::uniform(int d) {
  std::vector<Cyclotomic> xs;
  for (int i = 1; i < d; ++i) {
    long sign = (static_cast<long>(i) * (d - 1)) % 2 == 0 ? -1 : 1;
    xs.push_back(Cyclotomic(make_rational(sign, d - 1)));
  }
  return make_exact(d, std::move(xs), Origin::Uniform);
}

ESolution ESolution::subset(int d, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("subset must be nonempty");
  std::vector<Cyclotomic> xs;
  Cyclotomic inv_size(make_rational(1, static_cast<long>(s.size())));
  for (int m = 1; m < d; ++m) {
    Cyclotomic acc;
    for (int e : s) acc += Cyclotomic::theta_power(d, static_cast<long>(e) * m);
    xs.push_back(acc * inv_size);
  }
  return make_exact(d, std::move(xs), Origin::Subset);
}

ESolution ESolution::custom_exact(int d, std::vector<Cyclotomic> xs) {
  if (static_cast<int>(xs.size()) != d - 1)
    throw std::invalid_argument("xs must have d-1 entries");
  return make_exact(d, std::move(xs), Origin::Custom);
}

ESolution ESolution::custom_numeric(int d, std::vector<std::complex<double>> xs,
                                    double tol) {
  if (static_cast<int>(xs.size()) != d - 1)
    throw std::invalid_argument("xs must have d-1 entries");
  double worst = 0.0;
  for (const auto& r : esystem_residual(xs, d)) worst = std::max(worst, std::abs(r));
  if (worst >= tol) throw std::domain_error("not an E-solution");
  ESolution sol;
  sol.d_ = d;
  sol.exact_ = false;
  sol.origin_ = Origin::Numeric;
  std::complex<double> acc(0.0, 0.0);
  std::complex<double> one(1.0, 0.0);
  auto x = [&](int m) { return index_value(xs, d, m, one); };
  for (int s = 0; s < d; ++s) acc += x(s) * x(d - s);
  sol.zeta_num_ = acc / static_cast<double>(d);
  if (std::abs(sol.zeta_num_) < 1e-8) throw std::domain_error("zeta vanishes");
  sol.xs_num_ = std::move(xs);
  return sol;
}

const std::vector<Cyclotomic>& ESolution::xs() const {
  if (!exact_) throw std::logic_error("numeric solution has no exact xs");
  return xs_;
}

const std::vector<std::complex<double>>& ESolution::xs_numeric() const { return xs_num_; }

const Cyclotomic& ESolution::zeta() const {
  if (!exact_) throw std::logic_error("numeric solution has no exact zeta");
  return zeta_;
}

std::complex<double> ESolution::zeta_numeric() const { return zeta_num_; }

TraceParams ESolution::trace_params() const {
  return TraceParams::from_xs(d_, xs());
}

std::string ESolution::str() const {
  std::ostringstream os;
  os << "d=" << d_ << " xs=(";
  if (exact_) {
    for (size_t i = 0; i < xs_.size(); ++i) {
      if (i) os << ", ";
      os << xs_[i].str();
    }
    os << ") zeta=" << zeta_.str();
  } else {
    for (size_t i = 0; i < xs_num_.size(); ++i) {
      if (i) os << ", ";
      os << xs_num_[i].real() << (xs_num_[i].imag() < 0 ? "" : "+") << xs_num_[i].imag()
         << "i";
    }
    os << ") zeta=" << zeta_num_.real() << (zeta_num_.imag() < 0 ? "" : "+")
       << zeta_num_.imag() << "i";
  }
  return os.str();
}

namespace {

using CVec = std::vector<std::complex<double>>;
using CMat = std::vector<CVec>;

// Jacobian of the residual map at x, with x_0 = x_d = 1 held fixed.
CMat esystem_jacobian(const CVec& xs, int d) {
  std::complex<double> one(1.0, 0.0);
  auto x = [&](int m) { return index_value(xs, d, m, one); };
  auto dA = [&](int m, int j) {
    // derivative of A_m = sum_s x_{m+s} x_{d-s} w.r.t. x_j
    std::complex<double> acc(0.0, 0.0);
    for (int s = 0; s < d; ++s) {
      if (((m + s) % d + d) % d == j) acc += x(d - s);
      if (((d - s) % d + d) % d == j) acc += x(m + s);
    }
    return acc;
  };
  std::complex<double> a0(0.0, 0.0);
  for (int s = 0; s < d; ++s) a0 += x(s) * x(d - s);
  CMat jac(d - 1, CVec(d - 1));
  for (int m = 1; m < d; ++m)
    for (int j = 1; j < d; ++j) {
      std::complex<double> v = dA(m, j) - x(m) * dA(0, j);
      if (m == j) v -= a0;
      jac[m - 1][j - 1] = v;
    }
  return jac;
}

// Gaussian elimination with partial pivoting; returns false on a singular
// system.
bool solve_linear(CMat a, CVec b, CVec& out) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-14) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      std::complex<double> f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  out.assign(n, {0.0, 0.0});
  for (int r = n - 1; r >= 0; --r) {
    std::complex<double> acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a[r][c] * out[c];
    out[r] = acc / a[r][r];
  }
  return true;
}

double max_norm(const CVec& v) {
  double worst = 0.0;
  for (const auto& c : v) worst = std::max(worst, std::abs(c));
  return worst;
}

}  // namespace

std::vector<ESolution> solve_numeric(int d, int attempts, uint64_t seed, double tol) {
  if (d > 8) throw std::invalid_argument("solver supports d <= 8");
  std::vector<ESolution> found;
  if (d == 1) {
    found.push_back(ESolution::custom_numeric(1, {}, tol));
    return found;
  }

  std::vector<CVec> starts;
  {
    // The two exact families seed the search so they are always recovered.
    ESolution rou = ESolution::roots_of_unity(d);
    starts.push_back(rou.xs_numeric());
    ESolution uni = ESolution::uniform(d);
    starts.push_back(uni.xs_numeric());
  }
  std::mt19937_64 eng(seed);
  auto uniform01 = [&]() {
    return static_cast<double>(eng() >> 11) / 9007199254740992.0;  // 2^53
  };
  for (int a = 0; a < attempts; ++a) {
    CVec x(d - 1);
    for (auto& c : x) c = {3.0 * uniform01() - 1.5, 3.0 * uniform01() - 1.5};
    starts.push_back(std::move(x));
  }

  std::vector<CVec> solutions;
  for (const CVec& start : starts) {
    CVec x = start;
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
      CVec f = esystem_residual(x, d);
      if (max_norm(f) < tol) {
        converged = true;
        break;
      }
      CVec step;
      if (!solve_linear(esystem_jacobian(x, d), f, step)) break;
      for (int i = 0; i < d - 1; ++i) x[i] -= step[i];
      if (max_norm(x) > 1e6) break;
    }
    if (!converged) continue;
    if (max_norm(esystem_residual(x, d)) >= tol) continue;
    bool duplicate = false;
    for (const CVec& s : solutions) {
      double dist = 0.0;
      for (int i = 0; i < d - 1; ++i) dist = std::max(dist, std::abs(s[i] - x[i]));
      if (dist < 1e-6) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    solutions.push_back(x);
  }

  // Deterministic presentation order.
  std::sort(solutions.begin(), solutions.end(), [](const CVec& a, const CVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
      if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
  });
  for (CVec& x : solutions) {
    try {
      found.push_back(ESolution::custom_numeric(d, std::move(x), tol));
    } catch (const std::domain_error&) {
      // zeta-zero candidates are dropped
    }
  }
  return found;
}

}  // namespace ydelta
