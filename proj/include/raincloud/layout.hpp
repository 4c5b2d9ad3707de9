#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "raincloud/shape.hpp"
#include "raincloud/stats.hpp"

namespace raincloud {

/// Affine data-to-pixel mapping for the shared x axis.
struct ScaleX {
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    double range_lo = 0.0;
    double range_hi = 1.0;

    double apply(double x) const {
        return range_lo + (x - domain_lo) * (range_hi - range_lo) / (domain_hi - domain_lo);
    }
};

enum class BandRole { cloud, rain, lightning };

/// Horizontal slice of the panel assigned to one component role.
struct Band {
    double y_top = 0.0;
    double y_bottom = 0.0;
    BandRole role = BandRole::cloud;

    double height() const { return y_bottom - y_top; }
    double mid() const { return 0.5 * (y_top + y_bottom); }
};

struct Rgba {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    double a = 1.0;  // coverage in [0, 1]

    bool operator==(const Rgba&) const = default;
};

enum class MarkShape { circle, rect, hline, vline, polyline, polygon };

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct CircleGeom {
    double cx = 0.0, cy = 0.0, r = 0.0;
};
struct RectGeom {
    double x = 0.0, y = 0.0, w = 0.0, h = 0.0;  // top-left corner plus size
};
struct SegmentGeom {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
};
struct PolyGeom {
    std::vector<Vec2> pts;
};

/// One resolved pixel-space mark. Circles, rects and polygons are filled;
/// hline/vline/polyline are stroked with stroke_width.
struct Mark {
    MarkShape shape = MarkShape::circle;
    std::variant<CircleGeom, RectGeom, SegmentGeom, PolyGeom> geom;
    Rgba color;
    double stroke_width = 1.0;

    static Mark circle(double cx, double cy, double r, Rgba color);
    static Mark rect(double x, double y, double w, double h, Rgba color);
    static Mark hline(double x0, double x1, double y, Rgba color, double stroke = 1.0);
    static Mark vline(double x, double y0, double y1, Rgba color, double stroke = 1.0);
    static Mark polyline(std::vector<Vec2> pts, Rgba color, double stroke = 1.0);
    static Mark polygon(std::vector<Vec2> pts, Rgba color);
};

using MarkList = std::vector<Mark>;

enum class RainKind { strip, dot, jitter, beeswarm, wilkinson, wheat };

struct RainParams {
    RainKind kind = RainKind::strip;
    double dot_radius = 5.0;             // pixels
    double opacity = 1.0;                // (0, 1]
    std::optional<int> wheat_bins;       // absent: sturges
    std::uint64_t seed = 0;              // jitter only
};

enum class CloudKind { density, violin, split_boxplot, heatmap, histogram, quantile_dotplot };

struct CloudParams {
    CloudKind kind = CloudKind::density;
    int n_dots = 20;                     // quantile_dotplot
    BinRule bin_rule = BinRule::sturges; // histogram
};

enum class LightningKind { boxplot, midgap, qinterval, mean_marker, mean_interval, moment_plot };

struct LightningParams {
    LightningKind kind = LightningKind::boxplot;
    double sd_multiple = 1.0;  // mean_interval half-width, in sd units
};

/// Intervals layout_lightning draws from, precomputed from the sample.
struct LightningIntervals {
    Interval whiskers_iqr;   // iqr_fence_clamped
    Interval whiskers_range; // full_range
    Interval q66;            // 66% quantile interval
    Interval q95;            // 95% quantile interval
    Interval sd_interval;    // mean +- sd_multiple * sd
};

LightningIntervals lightning_intervals(const Sample& sample, double sd_multiple);

/// Fits a dot radius so a stack of max_stack dots fits the band:
/// min(requested_r, band_height / (2 * max_stack)).
double autosize_dot_radius(int max_stack, double band_height, double requested_r);

// Rain layouts. All are pure functions of their arguments; the jitter
// layout draws y positions from a generator seeded with params.seed.
MarkList layout_strip(const Sample& sample, const ScaleX& scale, const Band& band,
                      const RainParams& params, const Rgba& color);
MarkList layout_dot(const Sample& sample, const ScaleX& scale, const Band& band,
                    const RainParams& params, const Rgba& color);
MarkList layout_jitter(const Sample& sample, const ScaleX& scale, const Band& band,
                       const RainParams& params, const Rgba& color);
MarkList layout_beeswarm(const Sample& sample, const ScaleX& scale, const Band& band,
                         const RainParams& params, const Rgba& color);
MarkList layout_wilkinson(const Sample& sample, const ScaleX& scale, const Band& band,
                          const RainParams& params, const Rgba& color);
MarkList layout_wheat(const Sample& sample, const ScaleX& scale, const Band& band,
                      const RainParams& params, const Rgba& color);

/// Dispatches on params.kind.
MarkList layout_rain(const Sample& sample, const ScaleX& scale, const Band& band,
                     const RainParams& params, const Rgba& color);

MarkList layout_cloud(const Sample& sample, const ScaleX& scale, const Band& band,
                      const CloudParams& params, const Rgba& color, const Rgba& background);

MarkList layout_lightning(const SummaryStats& stats, const LightningIntervals& intervals,
                          const ScaleX& scale, const Band& band, const LightningParams& params,
                          const Rgba& color);

}  // namespace raincloud
