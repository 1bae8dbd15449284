#include "ydelta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <complex>
#include <iostream>
#include <optional>
#include <sstream>

#include "ydelta/checks.hpp"
#include "ydelta/esystem.hpp"
#include "ydelta/invariant.hpp"

namespace ydelta {

namespace {

using json = nlohmann::json;

constexpr std::complex<double> kDefaultU{0.62, 0.31};
constexpr std::complex<double> kDefaultZ{0.47, -0.23};

std::string format_complex(std::complex<double> c) {
  std::ostringstream os;
  os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// The solution selector as given on the command line.  Custom selectors keep
// their raw values so deliberately broken parameter sets can drive the
// verification suites as negative controls.
struct SolutionChoice {
  std::optional<ESolution> solution;  // set when construction/verification passed
  bool custom = false;
  std::vector<std::complex<double>> custom_xs;
  std::string failure;  // why verification failed, when it did
};

SolutionChoice parse_solution(const std::string& selector, int d) {
  SolutionChoice choice;
  if (selector == "roots-of-unity") {
    choice.solution = ESolution::roots_of_unity(d);
    return choice;
  }
  if (selector == "uniform") {
    choice.solution = ESolution::uniform(d);
    return choice;
  }
  if (selector.rfind("subset:", 0) == 0) {
    std::vector<int> s;
    for (const std::string& part : split(selector.substr(7), ','))
      s.push_back(std::stoi(part));
    choice.solution = ESolution::subset(d, s);
    return choice;
  }
  if (selector.rfind("custom:", 0) == 0) {
    choice.custom = true;
    for (const std::string& part : split(selector.substr(7), ','))
      choice.custom_xs.push_back(parse_complex(part));
    if (static_cast<int>(choice.custom_xs.size()) != d - 1)
      throw CLI::ValidationError("--solution", "custom solution needs d-1 values");
    try {
      choice.solution = ESolution::custom_numeric(d, choice.custom_xs);
    } catch (const std::domain_error& e) {
      choice.failure = e.what();
    }
    return choice;
  }
  throw CLI::ValidationError("--solution", "unknown selector '" + selector + "'");
}

struct NumericPoint {
  std::complex<double> u, z;
};

NumericPoint parse_numeric_point(const std::string& text) {
  NumericPoint p{kDefaultU, kDefaultZ};
  bool have_u = false, have_z = false;
  for (const std::string& part : split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--numeric", "expected u=...,z=...");
    std::string key = part.substr(0, eq);
    std::complex<double> value = parse_complex(part.substr(eq + 1));
    if (key == "u") {
      p.u = value;
      have_u = true;
    } else if (key == "z") {
      p.z = value;
      have_z = true;
    } else {
      throw CLI::ValidationError("--numeric", "unknown key '" + key + "'");
    }
  }
  if (!have_u || !have_z)
    throw CLI::ValidationError("--numeric", "both u and z are required");
  return p;
}

int print_results(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all_ok = true;
  for (const CheckResult& r : results) {
    if (r.ok()) {
      out << "[ok]   " << r.name << ": " << r.pass << " checks\n";
    } else {
      all_ok = false;
      out << "[FAIL] " << r.name << ": " << r.fail << " of " << (r.pass + r.fail)
          << " checks failed";
      if (!r.note.empty()) out << " — " << r.note;
      out << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto to_double = [](const std::string& part, double fallback) {
    if (part.empty() || part == "+") return fallback;
    if (part == "-") return -fallback;
    size_t used = 0;
    double v = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad complex literal");
    return v;
  };

  // Split before the sign of the imaginary part (not an exponent sign).
  size_t cut = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
      cut = i;  // keep the last candidate
  }
  if (s.back() == 'i') {
    std::string re = (cut == std::string::npos) ? "" : s.substr(0, cut);
    std::string im = (cut == std::string::npos) ? s : s.substr(cut);
    im.pop_back();  // drop 'i'
    double real = re.empty() ? 0.0 : to_double(re, 1.0);
    return {real, to_double(im, 1.0)};
  }
  return {to_double(s, 1.0), 0.0};
}

namespace {

int cmd_delta_or_trace(bool want_delta, const std::string& braid_text, int d,
                       const std::string& selector, const std::string& numeric_text,
                       bool as_json, std::ostream& out, std::ostream& err) {
  BraidWord w = parse_braid(braid_text);
  SolutionChoice choice = parse_solution(selector, d);
  std::optional<NumericPoint> point;
  if (!numeric_text.empty()) point = parse_numeric_point(numeric_text);

  json j;
  j["n"] = w.n;
  j["exponent"] = exponent(w);

  if (choice.custom) {
    if (!choice.solution) {
      err << "error: " << choice.failure << "\n";
      return 3;
    }
    if (!point) {
      err << "error: custom solutions are numeric; pass --numeric u=...,z=...\n";
      return 2;
    }
    NumericDeltaParams params =
        NumericDeltaParams::from_xs(d, choice.custom_xs, point->u, point->z);
    std::complex<double> value;
    int half = 0;
    if (want_delta) {
      NumericInvariantValue v = delta_numeric(w, params);
      value = v.f;
      half = v.half;
    } else {
      value = markov_trace_numeric(braid_image(w, d), params.trace);
    }
    if (want_delta) j["half_lambda"] = half;
    j["value"] = format_complex(value);
    j["numeric"] = {{"re", value.real()}, {"im", value.imag()}};
    if (as_json) {
      out << j.dump() << "\n";
    } else {
      out << "n = " << w.n << "\n";
      out << "exponent = " << exponent(w) << "\n";
      if (want_delta) out << "half_lambda = " << half << "\n";
      out << "value = " << format_complex(value) << "\n";
    }
    return 0;
  }

  DeltaParams params = DeltaParams::from_solution(*choice.solution);
  Scalar value;
  int half = 0;
  if (want_delta) {
    InvariantValue v = delta(w, params);
    value = v.f;
    half = v.half;
  } else {
    value = markov_trace(braid_image(w, d), params.trace);
  }

  if (want_delta) j["half_lambda"] = half;
  j["value"] = value.str();
  if (point) {
    std::complex<double> numeric = value.eval(point->u, point->z);
    if (want_delta && half == 1) numeric *= std::sqrt(params.lambda.eval(point->u, point->z));
    j["numeric"] = {{"re", numeric.real()}, {"im", numeric.imag()}};
  }

  if (as_json) {
    out << j.dump() << "\n";
  } else {
    out << "n = " << w.n << "\n";
    out << "exponent = " << exponent(w) << "\n";
    if (want_delta) out << "half_lambda = " << half << "\n";
    out << "value = " << value.str() << "\n";
    if (j.contains("numeric"))
      out << "numeric = " << j["numeric"]["re"].get<double>() << " + "
          << j["numeric"]["im"].get<double>() << "i\n";
  }
  return 0;
}

int cmd_esolve(int d, int attempts, uint64_t seed, double tol, bool as_json,
               std::ostream& out) {
  std::vector<ESolution> sols = solve_numeric(d, attempts, seed, tol);
  if (as_json) {
    json arr = json::array();
    for (const ESolution& s : sols) {
      json item;
      item["xs"] = json::array();
      for (const auto& x : s.xs_numeric())
        item["xs"].push_back({{"re", x.real()}, {"im", x.imag()}});
      double worst = 0.0;
      for (const auto& r : esystem_residual(s.xs_numeric(), d))
        worst = std::max(worst, std::abs(r));
      item["residual"] = worst;
      item["zeta"] = {{"re", s.zeta_numeric().real()}, {"im", s.zeta_numeric().imag()}};
      arr.push_back(item);
    }
    out << arr.dump() << "\n";
  } else {
    out << sols.size() << " solution(s) for d=" << d << "\n";
    for (const ESolution& s : sols) {
      double worst = 0.0;
      for (const auto& r : esystem_residual(s.xs_numeric(), d))
        worst = std::max(worst, std::abs(r));
      out << "  " << s.str() << "  residual=" << worst << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, int d, const std::string& selector, uint64_t seed,
               std::ostream& out, std::ostream& err) {
  const std::vector<int> ns{2, 3, 4};
  if (suite == "relations") return print_results(relation_suite(d, ns), out);

  SolutionChoice choice = parse_solution(selector, d);
  if (suite == "markov") {
    if (choice.custom) {
      if (!choice.solution)
        err << "warning: " << choice.failure << "; running the suite as a control\n";
      NumericDeltaParams params =
          NumericDeltaParams::from_xs(d, choice.custom_xs, kDefaultU, kDefaultZ);
      return print_results(markov_suite_numeric(params, 25, 8, 4, 6, seed), out);
    }
    DeltaParams params = DeltaParams::from_solution(*choice.solution);
    return print_results(markov_suite(params, 25, 8, 4, 6, seed), out);
  }
  if (!choice.solution || !choice.solution->exact()) {
    err << "error: suite '" << suite << "' needs an exact solution selector\n";
    return 2;
  }
  if (suite == "trace")
    return print_results(trace_suite(*choice.solution, {2, 3}, 60, 30, seed), out);
  if (suite == "skein")
    return print_results(skein_suite(*choice.solution, 30, 4, 5, seed), out);
  err << "error: unknown suite '" << suite << "'\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact trace invariant for singular links via Yokonuma-Hecke algebras"};
  app.require_subcommand(1);

  std::string braid_text, selector = "roots-of-unity", numeric_text, suite;
  int d = 1;
  int attempts = 64;
  uint64_t seed = 1;
  double tol = 1e-10;
  bool as_json = false;

  CLI::App* sub_delta = app.add_subcommand("delta", "Compute the invariant of a closed braid");
  sub_delta->add_option("--braid", braid_text, "Braid word, e.g. \"s1^3\" or \"t1 s2^-1\"");
  sub_delta->add_option("--d", d, "Framing modulus")->required();
  sub_delta->add_option("--solution", selector,
                        "roots-of-unity | uniform | subset:0,2 | custom:a+bi,...");
  sub_delta->add_option("--numeric", numeric_text, "Evaluate at u=...,z=...");
  sub_delta->add_flag("--json", as_json, "JSON output");

  CLI::App* sub_trace = app.add_subcommand("trace", "Markov trace of the algebra image");
  sub_trace->add_option("--braid", braid_text, "Braid word");
  sub_trace->add_option("--d", d, "Framing modulus")->required();
  sub_trace->add_option("--solution", selector, "Solution selector");
  sub_trace->add_option("--numeric", numeric_text, "Evaluate at u=...,z=...");
  sub_trace->add_flag("--json", as_json, "JSON output");

  CLI::App* sub_solve = app.add_subcommand("esolve", "Numeric E-system solutions");
  sub_solve->add_option("--d", d, "Framing modulus")->required();
  sub_solve->add_option("--attempts", attempts, "Newton starts");
  sub_solve->add_option("--seed", seed, "Random seed");
  sub_solve->add_option("--tol", tol, "Residual tolerance");
  sub_solve->add_flag("--json", as_json, "JSON output");

  CLI::App* sub_verify = app.add_subcommand("verify", "Run a property suite");
  sub_verify->add_option("--suite", suite, "relations | trace | markov | skein")->required();
  sub_verify->add_option("--d", d, "Framing modulus")->required();
  sub_verify->add_option("--solution", selector, "Solution selector");
  sub_verify->add_option("--seed", seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sub_delta))
      return cmd_delta_or_trace(true, braid_text, d, selector, numeric_text, as_json, out,
                                err);
    if (app.got_subcommand(sub_trace))
      return cmd_delta_or_trace(false, braid_text, d, selector, numeric_text, as_json, out,
                                err);
    if (app.got_subcommand(sub_solve)) return cmd_esolve(d, attempts, seed, tol, as_json, out);
    if (app.got_subcommand(sub_verify)) return cmd_verify(suite, d, selector, seed, out, err);
  } catch (const BraidParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace ydelta
