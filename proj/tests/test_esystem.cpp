#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "ydelta/esystem.hpp"

using namespace ydelta;

TEST_SUITE("esystem") {

TEST_CASE("residuals of known candidates") {
  // d=3 uniform solution x1 = x2 = -1/2
  std::vector<Cyclotomic> uni{Cyclotomic(make_rational(-1, 2)),
                              Cyclotomic(make_rational(-1, 2))};
  for (const auto& r : esystem_residual(uni, 3)) CHECK(r.is_zero());

  // d=2 roots of unity x1 = -1
  std::vector<Cyclotomic> rou{Cyclotomic(-1)};
  for (const auto& r : esystem_residual(rou, 2)) CHECK(r.is_zero());

  // negative control: d=3, x1 = x2 = 1/3 misses by 10/27 in each equation
  std::vector<Cyclotomic> bad{Cyclotomic(make_rational(1, 3)),
                              Cyclotomic(make_rational(1, 3))};
  auto res = esystem_residual(bad, 3);
  REQUIRE(res.size() == 2);
  CHECK(res[0] == Cyclotomic(make_rational(10, 27)));
  CHECK(res[1] == Cyclotomic(make_rational(10, 27)));
}

TEST_CASE("exact families verify for d <= 8") {
  for (int d = 1; d <= 8; ++d) {
    ESolution rou = ESolution::roots_of_unity(d);
    CHECK(rou.zeta() == Cyclotomic(1));
    for (const auto& r : esystem_residual(rou.xs(), d)) CHECK(r.is_zero());

    ESolution uni = ESolution::uniform(d);
    if (d == 1) {
      CHECK(uni.zeta() == Cyclotomic(1));
    } else {
      CHECK(uni.zeta() == Cyclotomic(make_rational(1, d - 1)));
    }
    for (const auto& r : esystem_residual(uni.xs(), d)) CHECK(r.is_zero());
  }
}

TEST_CASE("subset family sweep for d <= 5") {
  for (int d = 2; d <= 5; ++d) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> s;
      for (int bit = 0; bit < d; ++bit)
        if (mask & (1u << bit)) s.push_back(bit);
      ESolution sol = ESolution::subset(d, s);  // construction verifies
      for (const auto& r : esystem_residual(sol.xs(), d)) CHECK(r.is_zero());
      // zeta = 1/|S|
      CHECK(sol.zeta() ==
            Cyclotomic(make_rational(1, static_cast<long>(s.size()))));
    }
  }
  CHECK_THROWS_AS(ESolution::subset(3, {}), std::invalid_argument);
}

TEST_CASE("family specializations match") {
  // d=2 uniform is all-ones (the S={0} subset); roots of unity is x1 = -1.
  CHECK(ESolution::uniform(2).xs()[0] == Cyclotomic(1));
  CHECK(ESolution::roots_of_unity(2).xs()[0] == Cyclotomic(-1));
  // uniform(3) coincides with the subset solution on S = {1, 2}.
  ESolution uni3 = ESolution::uniform(3);
  ESolution sub3 = ESolution::subset(3, {1, 2});
  CHECK(uni3.xs()[0] == sub3.xs()[0]);
  CHECK(uni3.xs()[1] == sub3.xs()[1]);
}

TEST_CASE("non-solutions are rejected at construction") {
  std::vector<Cyclotomic> bad{Cyclotomic(make_rational(1, 3)),
                              Cyclotomic(make_rational(1, 3))};
  CHECK_THROWS_WITH_AS(ESolution::custom_exact(3, bad), "not an E-solution",
                       std::domain_error);
  CHECK_THROWS_AS(ESolution::custom_numeric(3, {{0.3, 0.0}, {0.3, 0.0}}),
                  std::domain_error);
}

TEST_CASE("numeric solver rediscovers the families") {
  // d=2: x1 = 1 and x1 = -1 are among the solutions (plus the x1 = 0 subset
  // solution, which has zeta = 1/2 and stays).
  auto sols2 = solve_numeric(2, 48, 11);
  bool found_plus = false, found_minus = false;
  for (const ESolution& s : sols2) {
    REQUIRE(s.xs_numeric().size() == 1);
    for (const auto& r : esystem_residual(s.xs_numeric(), 2))
      CHECK(std::abs(r) < 1e-10);
    if (std::abs(s.xs_numeric()[0] - std::complex<double>(1.0, 0.0)) < 1e-8)
      found_plus = true;
    if (std::abs(s.xs_numeric()[0] - std::complex<double>(-1.0, 0.0)) < 1e-8)
      found_minus = true;
  }
  CHECK(found_plus);
  CHECK(found_minus);

  // d=3: the printed solution (-1/2, -1/2) appears.
  auto sols3 = solve_numeric(3, 48, 11);
  bool found_uniform = false;
  for (const ESolution& s : sols3) {
    for (const auto& r : esystem_residual(s.xs_numeric(), 3))
      CHECK(std::abs(r) < 1e-10);
    if (std::abs(s.xs_numeric()[0] - std::complex<double>(-0.5, 0.0)) < 1e-8 &&
        std::abs(s.xs_numeric()[1] - std::complex<double>(-0.5, 0.0)) < 1e-8)
      found_uniform = true;
  }
  CHECK(found_uniform);

  // determinism
  auto again = solve_numeric(3, 48, 11);
  REQUIRE(again.size() == sols3.size());
  for (size_t i = 0; i < again.size(); ++i)
    for (size_t j = 0; j < again[i].xs_numeric().size(); ++j)
      CHECK(std::abs(again[i].xs_numeric()[j] - sols3[i].xs_numeric()[j]) == 0.0);
}

TEST_CASE("reported exotic d=3 pair: verdict recorded") {
  // Candidate x1 = (1/3)(1/3 - 3i sqrt(3)/4), x2 = (1/4)(1 + i sqrt(3)),
  // tested as data, not assumed correct.
  const double s3 = std::sqrt(3.0);
  std::vector<std::complex<double>> xs{{1.0 / 9.0, -s3 / 4.0}, {0.25, s3 / 4.0}};
  auto res = esystem_residual(xs, 3);
  double worst = 0.0;
  for (const auto& r : res) worst = std::max(worst, std::abs(r));
  std::ostringstream os;
  os << "exotic d=3 pair residual = " << worst << " -> "
     << (worst < 1e-10 ? "E-solution" : "NOT an E-solution");
  MESSAGE(os.str());
  CHECK(std::isfinite(worst));
  // Same verdict for the conjugate pair.
  std::vector<std::complex<double>> conj{{1.0 / 9.0, s3 / 4.0}, {0.25, -s3 / 4.0}};
  double worst_conj = 0.0;
  for (const auto& r : esystem_residual(conj, 3))
    worst_conj = std::max(worst_conj, std::abs(r));
  CHECK(std::abs(worst - worst_conj) < 1e-12);
}

TEST_CASE("solution rendering") {
  ESolution uni = ESolution::uniform(3);
  CHECK(uni.str() == "d=3 xs=(-1/2, -1/2) zeta=1/2");
}

}  // TEST_SUITE
