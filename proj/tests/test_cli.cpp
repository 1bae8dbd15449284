#include <doctest.h>

#include <json.hpp>

#include <complex>
#include <sstream>

#include "ydelta/cli.hpp"
#include "ydelta/invariant.hpp"

using namespace ydelta;
using nlohmann::json;

namespace {

struct CliRun {
  int exit_code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5") == std::complex<double>(1.5, 0.0));
  CHECK(parse_complex("-2") == std::complex<double>(-2.0, 0.0));
  CHECK(parse_complex("1+2i") == std::complex<double>(1.0, 2.0));
  CHECK(parse_complex("1-0.5i") == std::complex<double>(1.0, -0.5));
  CHECK(parse_complex("0.25i") == std::complex<double>(0.0, 0.25));
  CHECK(parse_complex("i") == std::complex<double>(0.0, 1.0));
  CHECK(parse_complex("-i") == std::complex<double>(0.0, -1.0));
  CHECK(parse_complex("1e-3+2i") == std::complex<double>(0.001, 2.0));
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
}

TEST_CASE("delta of a singular loop at the uniform solution") {
  CliRun r = run({"delta", "--braid", "t1", "--d", "3", "--solution", "uniform"});
  CHECK(r.exit_code == 0);
  Scalar expected =
      (Scalar::from_rational(make_rational(1, 2)) - Scalar::z(1)) / Scalar::z(1);
  CHECK(r.out.find("value = " + expected.str()) != std::string::npos);
  CHECK(r.out.find("half_lambda = 0") != std::string::npos);
}

TEST_CASE("delta of the unknot prints 1") {
  CliRun r = run({"delta", "--braid", "", "--d", "2", "--solution", "roots-of-unity"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("value = 1\n") != std::string::npos);
}

TEST_CASE("trace subcommand prints tr of the image") {
  CliRun r = run({"trace", "--braid", "s1", "--d", "2", "--solution", "roots-of-unity"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("value = " + Scalar::z(1).str()) != std::string::npos);
}

TEST_CASE("json output and numeric round trip") {
  CliRun r = run({"delta", "--braid", "s1^3", "--d", "2", "--solution", "roots-of-unity",
                  "--numeric", "u=2+0i,z=0.3+0.1i", "--json"});
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["exponent"] == 3);
  CHECK(j["half_lambda"] == 0);

  DeltaParams p = DeltaParams::from_solution(ESolution::roots_of_unity(2));
  InvariantValue v = delta(parse_braid("s1^3"), p);
  CHECK(j["value"].get<std::string>() == v.f.str());
  std::complex<double> expected = v.f.eval({2.0, 0.0}, {0.3, 0.1});
  CHECK(std::abs(j["numeric"]["re"].get<double>() - expected.real()) < 1e-9);
  CHECK(std::abs(j["numeric"]["im"].get<double>() - expected.imag()) < 1e-9);
}

TEST_CASE("half-integer values integrate the lambda branch into numeric output") {
  CliRun r = run({"delta", "--braid", "t1^2", "--d", "2", "--solution", "roots-of-unity",
                  "--numeric", "u=2+0i,z=0.3+0.1i", "--json"});
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["half_lambda"] == 1);
  DeltaParams p = DeltaParams::from_solution(ESolution::roots_of_unity(2));
  InvariantValue v = delta(parse_braid("t1^2"), p);
  std::complex<double> expected = v.f.eval({2.0, 0.0}, {0.3, 0.1}) *
                                  std::sqrt(p.lambda.eval({2.0, 0.0}, {0.3, 0.1}));
  CHECK(std::abs(j["numeric"]["re"].get<double>() - expected.real()) < 1e-9);
  CHECK(std::abs(j["numeric"]["im"].get<double>() - expected.imag()) < 1e-9);
}

TEST_CASE("esolve finds the printed d=3 solution") {
  CliRun r = run({"esolve", "--d", "3", "--attempts", "32", "--seed", "5", "--json"});
  REQUIRE(r.exit_code == 0);
  json arr = json::parse(r.out);
  bool found = false;
  for (const auto& item : arr) {
    CHECK(item["residual"].get<double>() < 1e-10);
    auto xs = item["xs"];
    if (xs.size() == 2 && std::abs(xs[0]["re"].get<double>() + 0.5) < 1e-8 &&
        std::abs(xs[0]["im"].get<double>()) < 1e-8 &&
        std::abs(xs[1]["re"].get<double>() + 0.5) < 1e-8)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("verify suites exit 0 on success") {
  CliRun rel = run({"verify", "--suite", "relations", "--d", "1"});
  CHECK(rel.exit_code == 0);
  CliRun tr = run({"verify", "--suite", "trace", "--d", "2", "--solution", "uniform",
                   "--seed", "3"});
  CHECK(tr.exit_code == 0);
  CHECK(tr.out.find("[ok]") != std::string::npos);
}

TEST_CASE("verify markov flags a non-E custom solution") {
  CliRun r = run({"verify", "--suite", "markov", "--d", "3", "--solution",
                  "custom:0.3333+0i,0.3333+0i", "--seed", "2"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("not an E-solution") != std::string::npos);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("verify markov passes on a verified custom solution") {
  CliRun r = run({"verify", "--suite", "markov", "--d", "2", "--solution",
                  "custom:-1+0i", "--seed", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
}

TEST_CASE("braid parse errors exit 2 with a position") {
  CliRun r = run({"delta", "--braid", "q1", "--d", "2"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("position 0") != std::string::npos);
  CliRun r2 = run({"delta", "--braid", "t1^-1", "--d", "2"});
  CHECK(r2.exit_code == 2);
  CHECK(r2.err.find("singular generator has no inverse") != std::string::npos);
}

TEST_CASE("degenerate numeric points exit 3") {
  // The trefoil value carries lambda = (z - (1-u) zeta)/(u z), singular at u = 0.
  CliRun r = run({"delta", "--braid", "s1^3", "--d", "2", "--solution", "roots-of-unity",
                  "--numeric", "u=0+0i,z=1+0i"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("singular parameter point") != std::string::npos);
}

TEST_CASE("custom solutions need a sample point for delta") {
  CliRun r = run({"delta", "--braid", "s1", "--d", "2", "--solution", "custom:-1+0i"});
  CHECK(r.exit_code == 2);
  CliRun ok = run({"delta", "--braid", "s1^3", "--d", "2", "--solution", "custom:-1+0i",
                   "--numeric", "u=2+0i,z=0.3+0.1i", "--json"});
  REQUIRE(ok.exit_code == 0);
  json j = json::parse(ok.out);
  // matches the exact roots-of-unity value at the same point
  DeltaParams p = DeltaParams::from_solution(ESolution::roots_of_unity(2));
  InvariantValue v = delta(parse_braid("s1^3"), p);
  std::complex<double> expected = v.f.eval({2.0, 0.0}, {0.3, 0.1});
  CHECK(std::abs(j["numeric"]["re"].get<double>() - expected.real()) < 1e-9);
}

TEST_CASE("unknown flags and selectors are usage errors") {
  CHECK(run({"delta", "--braid", "s1", "--d", "2", "--solution", "nonsense"}).exit_code ==
        2);
  CHECK(run({"nonsense"}).exit_code == 2);
}

}  // TEST_SUITE
