#pragma once

namespace hgs {

/// Command-line entry point.  Exit codes: 0 success, 1 internal invariant
/// violation, 2 usage error, 3 resource cap exceeded; verify-paper maps a
/// nonzero failure count to 3 + count, capped at 125.
int run_cli(int argc, const char* const* argv);

}  // namespace hgs
