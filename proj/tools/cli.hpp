#pragma once

#include <ostream>

namespace toric::cli {

/// Runs one command line. JSON goes to `out`; usage problems are reported as
/// a JSON error document on `out` plus a one-line message on `err`.
/// Returns 0 on success, 1 when a verification fails, 2 on bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
