#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace ydelta {

// Complex literal of the form a+bi ("2", "-0.5i", "1+2i", "i", ...).
std::complex<double> parse_complex(const std::string& text);

// Entry point behind the ydelta binary.  Exit codes: 0 success, 1 failed
// verification suite, 2 parse/usage error, 3 degenerate parameters.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ydelta
