// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;  // a claim or a theorem check failed
inline constexpr int kExitUsage = 2;     // bad flags, unreadable input, bounds

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperforge::cli
