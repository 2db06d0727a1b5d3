#ifndef ARITHDEG_CLI_CLI_HPP
#define ARITHDEG_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace arithdeg::cli {

/// Exit codes: 0 all verdicts hold, 1 falsified or internal inconsistency,
/// 2 usage or parse error, 3 hypothesis violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arithdeg::cli

#endif  // ARITHDEG_CLI_CLI_HPP
