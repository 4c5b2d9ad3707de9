#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "raincloud/stats.hpp"

namespace raincloud {

enum class BinRule { sturges, freedman_diaconis };

enum class Kernel { gaussian };

/// Gaussian-kernel density estimate on a uniform grid covering
/// [min - 3h, max + 3h]. density is per data unit; the trapezoidal
/// integral over the grid stays within [0.98, 1.005].
struct DensityEstimate {
    std::vector<double> x;        // strictly increasing, uniform spacing
    std::vector<double> density;  // same length as x, >= 0
    double bandwidth = 0.0;       // data units, > 0
    Kernel kernel = Kernel::gaussian;
};

/// Uniform-width bins spanning [min, max]; right-open except the last.
struct HistogramBins {
    std::vector<double> edges;        // k+1 strictly increasing values
    std::vector<std::size_t> counts;  // k entries, summing to n
};

/// n_dots quantile values at midpoint probabilities (i + 0.5) / n_dots.
struct QuantileDots {
    std::size_t n_dots = 0;
    std::vector<double> values;  // sorted, length n_dots
};

/// Silverman's rule: 0.9 * min(sd, IQR/1.34) * n^(-1/5). Degenerate
/// scale (sd = IQR = 0) falls back to 1e-3 * max(|x|, 1); when only one
/// of the two scale estimates is zero the nonzero one is used, keeping
/// the result positive. Requires n >= 2.
double silverman_bandwidth(const Sample& sample);

/// Bandwidth defaults to silverman_bandwidth (single-point samples use
/// the degenerate fallback). grid_size uniform points.
DensityEstimate kde(const Sample& sample, std::optional<double> bandwidth = std::nullopt,
                    int grid_size = 256);

/// sturges: ceil(log2 n) + 1. freedman_diaconis: ceil(range / (2*IQR*n^(-1/3))),
/// minimum 1; falls back to sturges when IQR = 0 or n < 2.
int bin_count(const Sample& sample, BinRule rule);

HistogramBins histogram(const Sample& sample, BinRule rule);
HistogramBins histogram(const Sample& sample, int k);

QuantileDots quantile_dots(const Sample& sample, int n_dots = 20);

}  // namespace raincloud
