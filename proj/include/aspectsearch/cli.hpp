#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aspectsearch {

/// Command-line front end. `args` excludes the program name.
///
/// Exit codes: 0 success; 2 validation or usage error; 3 numerical-contract
/// error (insufficient quadrature nodes); 4 verification failure
/// (a bound check reported holds = false).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace aspectsearch
