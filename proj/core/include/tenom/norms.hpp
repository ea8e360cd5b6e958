#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tenom/grid.hpp"

namespace tenom::bench {

/// L1 = mean |e|, L2 = root mean square, Linf = max |e| over interior cells.
struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Throws tenom::Error when the lengths differ or are zero.
ErrorNorms error_norms(std::span<const double> numerical, std::span<const double> reference);

/// Samples a fine 1D profile at the coarse cell centres by linear
/// interpolation between fine centres, constant beyond the outermost ones.
std::vector<double> restrict_to(std::span<const double> fine, const UniformGrid& fine_grid,
                                const UniformGrid& coarse_grid);

/// log2(coarse / fine); empty when either error is at round-off level.
std::optional<double> observed_order(double e_coarse, double e_fine, double ratio = 2.0);

}  // namespace tenom::bench
