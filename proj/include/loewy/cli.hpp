// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief The `loewy` command line: loewy, verify, hash and paths subcommands.
 *
 * Exit codes: 0 success, 2 input error, 3 engine disagreement or verification failure.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loewy {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMismatch = 3;

/// Runs the command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loewy
