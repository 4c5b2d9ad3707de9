#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace raincloud {

/// Validated univariate data: finite values held sorted ascending.
/// Construction sorts and rejects NaN/infinity; statistical operations
/// reject the empty sample.
class Sample {
public:
    Sample() = default;
    explicit Sample(std::vector<double> values, std::string label = {});

    const std::vector<double>& values() const { return values_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// Smallest/largest value; throws EmptySampleError when empty.
    double min() const;
    double max() const;

private:
    std::vector<double> values_;
    std::string label_;
};

/// Descriptive summary consumed by lightning layouts.
/// sd uses the n-1 denominator; skewness and excess kurtosis use
/// n-denominator central moments and are defined as 0 when sd = 0.
struct SummaryStats {
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

/// What an interval mark stands for. Recorded so visually identical
/// intervals remain distinguishable downstream.
enum class IntervalKind { whisker_iqr, whisker_range, quantile_mass, sd_multiple };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    IntervalKind kind = IntervalKind::whisker_range;
};

enum class WhiskerRule {
    iqr_fence_clamped,  // nearest data values inside q1/q3 -/+ 1.5*IQR
    full_range,         // [min, max]
};

/// Type-7 quantile (linear interpolation between order statistics).
/// p must lie in [0, 1].
double quantile(const Sample& sample, double p);

SummaryStats summarize(const Sample& sample);

Interval whisker_bounds(const Sample& sample, WhiskerRule rule);

/// Central interval holding `mass` probability: quantiles at (1-mass)/2
/// and (1+mass)/2. mass must lie in (0, 1).
Interval quantile_interval(const Sample& sample, double mass);

}  // namespace raincloud
