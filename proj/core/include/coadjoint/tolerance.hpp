#pragma once

#include <algorithm>

namespace coadjoint {

/// Thresholds shared by every operation. Both are relative: a comparison
/// against `x` on an input of norm `n` uses `x * scale(n)`.
struct ToleranceConfig {
    double classify = 1e-8;     ///< zero tests that decide an orbit class
    double structural = 1e-10;  ///< metric / algebra constraint residuals
};

inline double scale(double norm) noexcept { return std::max(1.0, norm); }

}  // namespace coadjoint
