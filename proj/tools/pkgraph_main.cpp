// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "pkgraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pkgraph::cli::Environment env;
    env.stdout_is_tty = ::isatty(STDOUT_FILENO) != 0;
    env.no_color = std::getenv("NO_COLOR") != nullptr;
    return pkgraph::cli::run_cli(args, std::cin, std::cout, std::cerr, env);
}
