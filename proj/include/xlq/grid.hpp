#pragma once

// The standard verification grid: hits the first nontrivial deformation at
// two couplings, two second-level deformations, and one third-level case.

#include <vector>

#include "deform.hpp"

namespace xlq {

inline const std::vector<Params>& verification_grid() {
    static const std::vector<Params> grid = {
        {1.0, 1}, {2.5, 1}, {1.0, 2}, {3.0, 2}, {1.5, 3},
    };
    return grid;
}

inline constexpr int verification_n_max = 5;

}  // namespace xlq
