#ifndef ZGDOF_CLI_HPP
#define ZGDOF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zgdof {

// Runs the CLI on the given arguments (excluding argv[0]).
// Exit codes: 0 success, 1 domain error, 2 usage error.
// Structured results go to `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zgdof

#endif // ZGDOF_CLI_HPP
