#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raincloud/render.hpp"
#include "raincloud/stats.hpp"

namespace raincloud {

enum class DistFamily { gaussian, gaussian_mixture, lognormal, discretized_gaussian };

struct MixtureComponent {
    double mu = 0.0;
    double sigma = 1.0;
    double weight = 1.0;
};

/// Seeded generator description. Sampling is bit-reproducible for a fixed
/// spec: splitmix64 uniforms feed Box-Muller pairs in a fixed order.
struct DistributionSpec {
    DistFamily family = DistFamily::gaussian;
    double mu = 0.0;
    double sigma = 1.0;                        // per-family scale; log-scale for lognormal
    std::vector<MixtureComponent> components;  // gaussian_mixture only
    double grain = 1.0;                        // discretized_gaussian rounding grain
    int n = 100;
    std::uint64_t seed = 0;
};

Sample gen_sample(const DistributionSpec& dist);

/// Pixel-level difference between two equally sized images.
/// changed_fraction counts pixels with any channel differing; mean_abs is
/// the mean absolute RGB-channel difference. per_role is present only for
/// the opaque default palette (heatmap ramp shades classify as cloud).
struct DiffMetric {
    double changed_fraction = 0.0;
    double mean_abs = 0.0;
    std::optional<std::map<BandRole, double>> per_role;
};

DiffMetric pixel_diff(const RasterImage& a, const RasterImage& b);

/// Ten panels, two of which render the same sample.
struct LineupResult {
    std::vector<RasterImage> panels;
    std::pair<int, int> identical_indices{0, 0};
    std::uint64_t seed = 0;
};

/// Draws 9 samples from dist (seeded sub-streams), renders one of them at
/// two positions chosen from the 45 unordered pairs, shuffles the rest.
/// Jittered rains get per-panel seeds from the same stream.
LineupResult make_lineup(const RaincloudSpec& spec, const DistributionSpec& dist,
                         std::uint64_t seed);

/// Same protocol with seeded bootstrap resamples of `data` as the null
/// generator.
LineupResult make_lineup(const RaincloudSpec& spec, const Sample& data, std::uint64_t seed);

enum class Experiment { hallucinator, confuser, jumbler, misleader };
enum class Verdict { failure_detected, no_failure_detected };

struct NamedMetric {
    std::string name;
    DiffMetric metric;
};

struct RobustnessReport {
    Experiment experiment = Experiment::hallucinator;
    RaincloudSpec spec_under_test;
    std::vector<NamedMetric> metrics;
    Verdict verdict = Verdict::no_failure_detected;
    double threshold_used = 0.0;
    std::map<std::string, double> details;  // auxiliary values (radii, deltas, ...)
};

/// Detector thresholds. The defaults separate the known positive and
/// negative design examples; all are configuration.
struct AvdConfig {
    double hallucinator_threshold = 0.001;  // max pairwise changed_fraction
    double confuser_threshold = 0.002;      // per-component changed_fraction floor
    double confuser_mean_sd_fraction = 0.1; // |dmean| > frac * pooled sd is "material"
    double confuser_kde_l1 = 0.1;           // KDE L1 distance > this is "material"
    double jumbler_threshold = 0.01;        // total changed_fraction floor
    double misleader_factor = 2.0;          // mode-arm diff over interior-arm diff
};

/// Renders `sample` k_seeds times with distinct rain seeds; metric is the
/// max pairwise changed_fraction. Deterministic rains score exactly 0.
RobustnessReport hallucinator_test(const RaincloudSpec& spec, const Sample& sample, int k_seeds,
                                   const AvdConfig& config = {});

/// Renders two different samples under one spec and shared scale; flags a
/// failure when a component's diff stays at the quantization floor even
/// though the samples differ materially (or the renders are identical).
RobustnessReport confuser_test(const RaincloudSpec& spec, const Sample& sample_a,
                               const Sample& sample_b, const AvdConfig& config = {});

/// Renders a continuous sample and its grain-1 rounded copy; flags a
/// failure when the discretization is visually negligible.
RobustnessReport jumbler_discretization_test(const RaincloudSpec& spec,
                                             const DistributionSpec& dist,
                                             const AvdConfig& config = {});

/// Renders base, base plus k points at mean + 1.5 sd, and base plus k
/// points at the mean; flags a failure when the mode arm's visual change
/// outweighs the interior arm's by misleader_factor.
RobustnessReport misleader_renormalization_test(const RaincloudSpec& spec,
                                                const DistributionSpec& base, int k_added = 10,
                                                const AvdConfig& config = {});

/// All four detectors with their preset data regimes over each spec,
/// deterministic given seed; reports in input order.
std::vector<RobustnessReport> run_suite(const std::vector<RaincloudSpec>& specs,
                                        std::uint64_t seed, const AvdConfig& config = {});

// Preset data regimes used by run_suite and the robustness CLI.
DistributionSpec suite_hallucinator_dist(std::uint64_t seed);
/// Moment-matched pair: unimodal gaussian vs an equal-weight two-component
/// mixture with the same mean and variance (components at mu +- 0.8 sigma,
/// component sd 0.6 sigma).
std::pair<DistributionSpec, DistributionSpec> moment_matched_pair(double mu, double sigma, int n,
                                                                  std::uint64_t seed_unimodal,
                                                                  std::uint64_t seed_bimodal);
DistributionSpec suite_jumbler_dist(std::uint64_t seed);
DistributionSpec suite_misleader_dist(std::uint64_t seed);

const char* to_string(Experiment e);
const char* to_string(Verdict v);

/// FNV-1a digest of the canonical config serialization.
std::string spec_digest(const RaincloudSpec& spec);

/// Stable JSON document for a report list; schema documented in README.
std::string suite_report_json(const std::vector<RobustnessReport>& reports, std::uint64_t seed);

}  // namespace raincloud
