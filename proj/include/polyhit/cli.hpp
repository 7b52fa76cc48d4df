#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "polyhit/family.hpp"

namespace polyhit {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSolved = 0, kNo = 1, kInputError = 2, kSolverLimit = 3 };

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV blocks with the vertex cycle of each sampled 2-D member. Throws Unsupported unless d = 2, p = 1.
std::string sample_plot(const AffineFamily& family, std::size_t resolution);

}  // namespace polyhit
