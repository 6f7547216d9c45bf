#pragma once

namespace k3smooth {

// Full command-line frontend. Returns the process exit code:
// 0 success, 1 internal failure, 2 input/usage error,
// 3 analysis not applicable (positive-dimensional singular locus).
int run_cli(int argc, const char* const* argv);

}  // namespace k3smooth
