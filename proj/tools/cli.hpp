// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace banzhaf::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one command (args exclude the program name). JSON selected by
// `--out -` goes to out; diagnostics and notes go to err. Never throws:
// errors map to the exit codes above.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

// Same, writing to std::cout / std::cerr.
int run_command(const std::vector<std::string>& args);

}  // namespace banzhaf::cli
