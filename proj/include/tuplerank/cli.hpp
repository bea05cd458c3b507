#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tuplerank::cli {

/// Exit codes of the command-line frontend.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Ranks of the k=2 lattice: row r, column c holds psi((r, c)).
std::string render_grid(std::size_t rows, std::size_t cols);

/// SVG drawing of the same lattice; consecutive cells in rank order are
/// joined by arrows.
std::string render_grid_svg(std::size_t rows, std::size_t cols);

}  // namespace tuplerank::cli
