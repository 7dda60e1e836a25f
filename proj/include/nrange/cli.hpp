// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_CLI_HPP
#define NRANGE_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nrange {

/// One resolved CLI invocation.
struct JobConfig {
    std::string command;              // range | cnum | dilate | verify | oracle
    std::string verify_mode;          // glw | bt | trunc | normal | cnum-gap | inf-example
    std::string input_path;
    std::string k_spec = "1";         // positive integer or "inf"
    int grid = 720;
    std::uint64_t seed = 0;
    int budget = 16;
    std::string output = "nrange_out";
    std::optional<std::string> format; // svg | csv | json
};

/// Parses argv-style arguments and runs the job. Returns the process exit
/// status: 0 on success (and for verify: only when the report passed),
/// 1 when a verification ran but did not pass, 2 on any error. Machine
/// readable JSON goes to err on every failure path.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nrange

#endif // NRANGE_CLI_HPP
