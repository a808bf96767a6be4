#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twomega {

/// Command-line entry point. args excludes the program name. Subcommands:
/// gen, invariant, contains, classify, recognize, solve, verify.
///
/// Exit codes: 0 success; 1 check failures, violations or failed
/// preconditions; 2 usage or input errors; 3 refusal (search budget hit).
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twomega
