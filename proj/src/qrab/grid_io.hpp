// grid_io.hpp — phase-space grid CSV format.
//
// Layout:
//     # x: <min> <max> <nx>
//     # p: <min> <max> <np>
//     <np rows of nx comma-separated values, row j holding W(x_i, p_j)>
//
// Values use the shortest round-trip decimal representation, so a
// write/read cycle is bit-exact.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qrab/wigner.hpp"

namespace qrab {

struct GridData {
    PhaseGrid grid;
    std::vector<double> values;  // row-major in p-then-x
};

void write_grid_csv(const PhaseGrid& grid, std::span<const double> values,
                    const std::filesystem::path& path);

GridData read_grid_csv(const std::filesystem::path& path);

// Shortest round-trip formatting for one double (shared with the CLI CSVs).
std::string format_double(double value);

}  // namespace qrab
