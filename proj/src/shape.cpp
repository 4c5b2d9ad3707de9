#include "raincloud/shape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "raincloud/errors.hpp"

namespace raincloud {

namespace {

double sample_sd(const Sample& sample) { return summarize(sample).sd; }

double sample_iqr(const Sample& sample) {
    return quantile(sample, 0.75) - quantile(sample, 0.25);
}

}  // namespace

double silverman_bandwidth(const Sample& sample) {
    if (sample.size() < 2) throw InsufficientDataError("silverman_bandwidth needs n >= 2");
    const double sd = sample_sd(sample);
    const double iqr_scale = sample_iqr(sample) / 1.34;
    double scale = std::min(sd, iqr_scale);
    if (scale == 0.0) scale = std::max(sd, iqr_scale);
    if (scale == 0.0) {
        // All values equal: nominal positive bandwidth proportional to magnitude.
        return 1e-3 * std::max(std::abs(sample.values().front()), 1.0);
    }
    return 0.9 * scale * std::pow(static_cast<double>(sample.size()), -0.2);
}

DensityEstimate kde(const Sample& sample, std::optional<double> bandwidth, int grid_size) {
    if (sample.empty()) throw EmptySampleError();
    if (bandwidth && !(*bandwidth > 0.0)) {
        throw InvalidParameterError("kde bandwidth must be positive");
    }
    if (grid_size < 2) throw InvalidParameterError("kde grid_size must be >= 2");

    double h;
    if (bandwidth) {
        h = *bandwidth;
    } else if (sample.size() >= 2) {
        h = silverman_bandwidth(sample);
    } else {
        h = 1e-3 * std::max(std::abs(sample.values().front()), 1.0);
    }

    const double lo = sample.min() - 3.0 * h;
    const double hi = sample.max() + 3.0 * h;
    const double step = (hi - lo) / static_cast<double>(grid_size - 1);

    DensityEstimate est;
    est.bandwidth = h;
    est.x.resize(grid_size);
    est.density.resize(grid_size);
    const double norm = 1.0 / (static_cast<double>(sample.size()) * h *
                               std::sqrt(2.0 * std::numbers::pi));
    for (int i = 0; i < grid_size; ++i) {
        const double xi = lo + step * static_cast<double>(i);
        double acc = 0.0;
        for (double v : sample.values()) {
            const double z = (xi - v) / h;
            acc += std::exp(-0.5 * z * z);
        }
        est.x[i] = xi;
        est.density[i] = acc * norm;
    }
    return est;
}

int bin_count(const Sample& sample, BinRule rule) {
    if (sample.empty()) throw EmptySampleError();
    const double n = static_cast<double>(sample.size());
    const int sturges = static_cast<int>(std::ceil(std::log2(n))) + 1;
    if (rule == BinRule::sturges) return sturges;
    if (sample.size() < 2) return sturges;
    const double iqr = sample_iqr(sample);
    if (iqr <= 0.0) return sturges;  // degenerate spread: fall back
    const double width = 2.0 * iqr * std::pow(n, -1.0 / 3.0);
    const double range = sample.max() - sample.min();
    return std::max(1, static_cast<int>(std::ceil(range / width)));
}

namespace {

HistogramBins histogram_k(const Sample& sample, int k) {
    if (sample.empty()) throw EmptySampleError();
    if (k < 1) throw InvalidParameterError("histogram needs at least one bin");

    double lo = sample.min();
    double hi = sample.max();
    if (lo == hi) {
        // Zero range: one bin of nominal width centered on the value.
        HistogramBins bins;
        bins.edges = {lo - 0.5, lo + 0.5};
        bins.counts = {sample.size()};
        return bins;
    }

    HistogramBins bins;
    bins.edges.resize(k + 1);
    bins.counts.assign(k, 0);
    const double width = (hi - lo) / static_cast<double>(k);
    for (int i = 0; i <= k; ++i) bins.edges[i] = lo + width * static_cast<double>(i);
    bins.edges[0] = lo;
    bins.edges[k] = hi;  // span exactly [min, max]
    for (double v : sample.values()) {
        auto idx = static_cast<long>((v - lo) / width);
        idx = std::clamp(idx, 0l, static_cast<long>(k - 1));
        // Right-open bins; the last bin also takes its right edge.
        while (idx > 0 && v < bins.edges[idx]) --idx;
        while (idx < k - 1 && v >= bins.edges[idx + 1]) ++idx;
        ++bins.counts[idx];
    }
    return bins;
}

}  // namespace

HistogramBins histogram(const Sample& sample, BinRule rule) {
    return histogram_k(sample, bin_count(sample, rule));
}

HistogramBins histogram(const Sample& sample, int k) { return histogram_k(sample, k); }

QuantileDots quantile_dots(const Sample& sample, int n_dots) {
    if (sample.empty()) throw EmptySampleError();
    if (n_dots < 1) throw InvalidParameterError("quantile_dots needs n_dots >= 1");
    QuantileDots dots;
    dots.n_dots = static_cast<std::size_t>(n_dots);
    dots.values.resize(dots.n_dots);
    for (int i = 0; i < n_dots; ++i) {
        dots.values[i] = quantile(sample, (static_cast<double>(i) + 0.5) /
                                              static_cast<double>(n_dots));
    }
    return dots;
}

}  // namespace raincloud
