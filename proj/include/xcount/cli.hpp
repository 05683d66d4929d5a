#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xcount {

// Entry point behind the xcount binary. Subcommands: count, weighted,
// maxweight, verify, gen, tau, stats. Returns the process exit code:
// 0 success, 1 input/parse/verification failure, 2 usage error.
// `input` serves `--input -`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream* input = nullptr);

}  // namespace xcount
