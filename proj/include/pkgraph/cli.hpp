// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Command-line driver. Exit codes: 0 success without findings, 1 findings
// (scan), 2 usage error, 3 input that failed to parse or ingest.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pkgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

inline constexpr std::string_view kVersion = "pkgraph 0.1.0";

struct Environment {
    bool stdout_is_tty = false;
    /// NO_COLOR is set.
    bool no_color = false;
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
            const Environment& env = {});

/// The catalog compiled into the binary.
std::string_view bundled_catalog();

}  // namespace pkgraph::cli
