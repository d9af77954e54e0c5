#pragma once

#include <ostream>

namespace k5mf::cli {

// Exit codes: 0 ok, 1 property violation (witness written), 2 usage or parse
// error, 3 budget exceeded.
enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

// Subcommands gen, detect, discharge, decompose, minor, color, verify-lemma.
// The first line written to `out` echoes the effective configuration.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k5mf::cli
