#pragma once

#include <cstddef>
#include <vector>

#include "zzi/angles.hpp"

namespace zzi::oracle {

// Finite truncation of the rotated half-plane: columns 0..width, each with
// `height` spins (column p is vertically offset by half a cell when p is
// odd, so every spin couples to two diagonal neighbors per adjacent column).
// Column 0, column `width`, and the out-of-range rows are fixed to
// `boundary_spin`.
struct StripSpec {
    std::size_t width = 0;            // number of column gaps
    std::size_t height = 0;           // spins per column
    std::vector<double> couplings;    // beta*J for gaps p = 0..width-1
    int boundary_spin = +1;

    static StripSpec from_angles(const AngleSequence& angles,
                                 std::size_t width, std::size_t height);
};

// Exact <sigma_(col,row)> by summation over all free-spin configurations
// (free spins live in columns 1..width-1); limited to 24 free spins.
double enumerate_magnetization(const StripSpec& spec, std::size_t col,
                               std::size_t row);

// Exact <sigma_(col,row)> via directional transfer products over 2^height
// column configurations; limited to height <= 14.
double transfer_matrix_magnetization(const StripSpec& spec, std::size_t col,
                                     std::size_t row);

} // namespace zzi::oracle
