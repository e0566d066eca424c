#ifndef QCHART_CLI_HPP
#define QCHART_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qchart {

/// Entry point behind the qchart binary.  Subcommands: audit, export,
/// integral.  Exit codes: 0 success, 1 audit found a violated identity,
/// 2 usage error (bad flags, parameters out of range, unknown operator,
/// malformed element text).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qchart

#endif
