#pragma once

#include <cstddef>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace condense::cli {

// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kDegenerateText = 3,
  kShuffleMismatch = 4,
};

// Runs the command line `args` (args[0] is the program name) writing normal
// output to `out` and diagnostics to `err`; returns the exit status.
int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Fisher-Yates permutation of 0..n-1. Draws only raw mt19937_64 output, so
// a given seed yields the same permutations on every platform.
std::vector<std::size_t> SeededPermutation(std::size_t n, std::mt19937_64& rng);

}  // namespace condense::cli
