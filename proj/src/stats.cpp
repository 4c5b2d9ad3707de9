#include "raincloud/stats.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "raincloud/errors.hpp"

namespace raincloud {

Sample::Sample(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    for (double v : values_) {
        if (!std::isfinite(v)) throw InvalidParameterError("sample contains a non-finite value");
    }
    std::sort(values_.begin(), values_.end());
}

double Sample::min() const {
    if (values_.empty()) throw EmptySampleError();
    return values_.front();
}

double Sample::max() const {
    if (values_.empty()) throw EmptySampleError();
    return values_.back();
}

double quantile(const Sample& sample, double p) {
    if (sample.empty()) throw EmptySampleError();
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameterError("quantile probability outside [0,1]");
    const auto& x = sample.values();
    const std::size_t n = x.size();
    if (n == 1) return x[0];
    const double h = static_cast<double>(n - 1) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return x[n - 1];
    return x[lo] + (h - static_cast<double>(lo)) * (x[lo + 1] - x[lo]);
}

SummaryStats summarize(const Sample& sample) {
    if (sample.empty()) throw EmptySampleError();
    const auto& x = sample.values();
    const std::size_t n = x.size();
    const double dn = static_cast<double>(n);

    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / dn;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;

    SummaryStats s;
    s.n = n;
    s.mean = mean;
    s.sd = n > 1 ? std::sqrt(m2 * dn / (dn - 1.0)) : 0.0;
    s.min = x.front();
    s.max = x.back();
    s.q1 = quantile(sample, 0.25);
    s.median = quantile(sample, 0.5);
    s.q3 = quantile(sample, 0.75);
    // 0-defined higher moments for constant data, so degenerate samples
    // still produce drawable glyphs.
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    }
    return s;
}

Interval whisker_bounds(const Sample& sample, WhiskerRule rule) {
    if (sample.empty()) throw EmptySampleError();
    const auto& x = sample.values();
    if (rule == WhiskerRule::full_range) {
        return {x.front(), x.back(), IntervalKind::whisker_range};
    }
    const double q1 = quantile(sample, 0.25);
    const double q3 = quantile(sample, 0.75);
    const double iqr = q3 - q1;
    const double lo_fence = q1 - 1.5 * iqr;
    const double hi_fence = q3 + 1.5 * iqr;
    // Endpoints are actual sample members: the nearest values inside the fences.
    const auto lo_it = std::lower_bound(x.begin(), x.end(), lo_fence);
    auto hi_it = std::upper_bound(x.begin(), x.end(), hi_fence);
    // The fences always contain the quartiles, so both sides are nonempty.
    --hi_it;
    return {*lo_it, *hi_it, IntervalKind::whisker_iqr};
}

Interval quantile_interval(const Sample& sample, double mass) {
    if (sample.empty()) throw EmptySampleError();
    if (!(mass > 0.0 && mass < 1.0)) {
        throw InvalidParameterError("quantile interval mass outside (0,1)");
    }
    return {quantile(sample, (1.0 - mass) / 2.0), quantile(sample, (1.0 + mass) / 2.0),
            IntervalKind::quantile_mass};
}

}  // namespace raincloud
