#include "raincloud/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "raincloud/errors.hpp"
#include "raincloud/rng.hpp"

namespace raincloud {

Mark Mark::circle(double cx, double cy, double r, Rgba color) {
    Mark m;
    m.shape = MarkShape::circle;
    m.geom = CircleGeom{cx, cy, r};
    m.color = color;
    return m;
}

Mark Mark::rect(double x, double y, double w, double h, Rgba color) {
    if (w < 0) {
        x += w;
        w = -w;
    }
    if (h < 0) {
        y += h;
        h = -h;
    }
    Mark m;
    m.shape = MarkShape::rect;
    m.geom = RectGeom{x, y, w, h};
    m.color = color;
    return m;
}

Mark Mark::hline(double x0, double x1, double y, Rgba color, double stroke) {
    Mark m;
    m.shape = MarkShape::hline;
    m.geom = SegmentGeom{x0, y, x1, y};
    m.color = color;
    m.stroke_width = stroke;
    return m;
}

Mark Mark::vline(double x, double y0, double y1, Rgba color, double stroke) {
    Mark m;
    m.shape = MarkShape::vline;
    m.geom = SegmentGeom{x, y0, x, y1};
    m.color = color;
    m.stroke_width = stroke;
    return m;
}

Mark Mark::polyline(std::vector<Vec2> pts, Rgba color, double stroke) {
    Mark m;
    m.shape = MarkShape::polyline;
    m.geom = PolyGeom{std::move(pts)};
    m.color = color;
    m.stroke_width = stroke;
    return m;
}

Mark Mark::polygon(std::vector<Vec2> pts, Rgba color) {
    Mark m;
    m.shape = MarkShape::polygon;
    m.geom = PolyGeom{std::move(pts)};
    m.color = color;
    return m;
}

LightningIntervals lightning_intervals(const Sample& sample, double sd_multiple) {
    const SummaryStats stats = summarize(sample);
    LightningIntervals iv;
    iv.whiskers_iqr = whisker_bounds(sample, WhiskerRule::iqr_fence_clamped);
    iv.whiskers_range = whisker_bounds(sample, WhiskerRule::full_range);
    iv.q66 = quantile_interval(sample, 0.66);
    iv.q95 = quantile_interval(sample, 0.95);
    iv.sd_interval = {stats.mean - sd_multiple * stats.sd, stats.mean + sd_multiple * stats.sd,
                      IntervalKind::sd_multiple};
    return iv;
}

double autosize_dot_radius(int max_stack, double band_height, double requested_r) {
    if (max_stack < 1) throw InvalidParameterError("autosize_dot_radius needs max_stack >= 1");
    if (!(band_height > 0)) throw InvalidParameterError("autosize_dot_radius needs band_height > 0");
    return std::min(requested_r, band_height / (2.0 * static_cast<double>(max_stack)));
}

namespace {

void require_role(const Band& band, BandRole role, const char* op) {
    if (band.role != role) {
        throw InvalidParameterError(std::string(op) + ": band role mismatch");
    }
}

Rgba with_opacity(Rgba color, double opacity) {
    color.a *= opacity;
    return color;
}

// Greedy left-to-right column sweep: a value joins the open column while
// its pixel x stays within 2r of the column's running pixel mean; closed
// columns re-center every dot at the mean of their member values.
struct DotColumn {
    double value_sum = 0.0;
    double px_sum = 0.0;
    int count = 0;
};

std::vector<DotColumn> sweep_columns(const std::vector<double>& values, const ScaleX& scale,
                                     double r) {
    std::vector<DotColumn> columns;
    for (double v : values) {
        const double px = scale.apply(v);
        if (!columns.empty()) {
            DotColumn& open = columns.back();
            const double mean_px = open.px_sum / open.count;
            if (std::abs(px - mean_px) <= 2.0 * r) {
                open.value_sum += v;
                open.px_sum += px;
                ++open.count;
                continue;
            }
        }
        columns.push_back({v, px, 1});
    }
    return columns;
}

MarkList wilkinson_marks(const std::vector<double>& values, const ScaleX& scale, const Band& band,
                         double requested_r, const Rgba& color) {
    auto columns = sweep_columns(values, scale, requested_r);
    int max_stack = 1;
    for (const auto& c : columns) max_stack = std::max(max_stack, c.count);

    double r = requested_r;
    if (2.0 * r * max_stack > band.height()) {
        // One re-run with the reduced radius; column membership depends on
        // r, so the result is accepted as-is (fixed-point approximation).
        r = autosize_dot_radius(max_stack, band.height(), requested_r);
        columns = sweep_columns(values, scale, r);
    }

    MarkList marks;
    for (const auto& c : columns) {
        const double cx = scale.apply(c.value_sum / c.count);
        for (int i = 0; i < c.count; ++i) {
            const double cy = band.y_bottom - r - 2.0 * r * static_cast<double>(i);
            marks.push_back(Mark::circle(cx, cy, r, color));
        }
    }
    return marks;
}

}  // namespace

MarkList layout_strip(const Sample& sample, const ScaleX& scale, const Band& band,
                      const RainParams& params, const Rgba& color) {
    require_role(band, BandRole::rain, "layout_strip");
    const Rgba c = with_opacity(color, params.opacity);
    MarkList marks;
    marks.reserve(sample.size());
    for (double v : sample.values()) {
        marks.push_back(Mark::vline(scale.apply(v), band.y_top, band.y_bottom, c, 1.0));
    }
    return marks;
}

MarkList layout_dot(const Sample& sample, const ScaleX& scale, const Band& band,
                    const RainParams& params, const Rgba& color) {
    require_role(band, BandRole::rain, "layout_dot");
    const Rgba c = with_opacity(color, params.opacity);
    const double r = std::min(params.dot_radius, band.height() / 2.0);
    MarkList marks;
    marks.reserve(sample.size());
    for (double v : sample.values()) {
        marks.push_back(Mark::circle(scale.apply(v), band.y_bottom - r, r, c));
    }
    return marks;
}

MarkList layout_jitter(const Sample& sample, const ScaleX& scale, const Band& band,
                       const RainParams& params, const Rgba& color) {
    require_role(band, BandRole::rain, "layout_jitter");
    const double r = params.dot_radius;
    if (band.height() < 2.0 * r) throw BandTooThinError("jitter band thinner than dot diameter");
    const Rgba c = with_opacity(color, params.opacity);
    SplitMix64 gen(params.seed);
    MarkList marks;
    marks.reserve(sample.size());
    for (double v : sample.values()) {
        const double y = gen.uniform(band.y_top + r, band.y_bottom - r);
        marks.push_back(Mark::circle(scale.apply(v), y, r, c));
    }
    return marks;
}

namespace {

struct SwarmPoint {
    double x = 0.0;
    double y = 0.0;
};

// Nearest-offset sweep: each dot keeps its exact x and takes the feasible
// y closest to the band midline, preferring the upper side on ties.
std::vector<SwarmPoint> sweep_swarm(const std::vector<double>& values, const ScaleX& scale,
                                    double mid, double r) {
    const double diam = 2.0 * r;
    const double diam2 = diam * diam;
    std::vector<SwarmPoint> placed;
    placed.reserve(values.size());
    std::size_t window_start = 0;
    for (double v : values) {
        const double x = scale.apply(v);
        while (window_start < placed.size() && placed[window_start].x < x - diam) ++window_start;

        std::vector<double> candidates{mid};
        for (std::size_t j = window_start; j < placed.size(); ++j) {
            const double dx = x - placed[j].x;
            if (std::abs(dx) >= diam) continue;
            const double dy = std::sqrt(diam2 - dx * dx);
            candidates.push_back(placed[j].y - dy);
            candidates.push_back(placed[j].y + dy);
        }
        std::sort(candidates.begin(), candidates.end(), [mid](double a, double b) {
            const double da = std::abs(a - mid);
            const double db = std::abs(b - mid);
            if (da != db) return da < db;
            return a < b;  // tie: the upper side (smaller pixel y) wins
        });

        double chosen = mid;
        for (double y : candidates) {
            bool ok = true;
            for (std::size_t j = window_start; j < placed.size(); ++j) {
                const double dx = x - placed[j].x;
                if (std::abs(dx) >= diam) continue;
                const double dy = y - placed[j].y;
                if (dx * dx + dy * dy < diam2 - 1e-9) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = y;
                break;
            }
        }
        placed.push_back({x, chosen});
    }
    return placed;
}

}  // namespace

MarkList layout_beeswarm(const Sample& sample, const ScaleX& scale, const Band& band,
                         const RainParams& params, const Rgba& color) {
    require_role(band, BandRole::rain, "layout_beeswarm");
    const Rgba c = with_opacity(color, params.opacity);
    double r = params.dot_radius;
    auto placed = sweep_swarm(sample.values(), scale, band.mid(), r);

    double max_extent = 0.0;
    for (const auto& p : placed) max_extent = std::max(max_extent, std::abs(p.y - band.mid()));
    const double swarm_height = 2.0 * (max_extent + r);
    if (swarm_height > band.height()) {
        const int stack_equiv =
            static_cast<int>(std::ceil(swarm_height / (2.0 * r) - 1e-9));
        r = autosize_dot_radius(stack_equiv, band.height(), r);
        placed = sweep_swarm(sample.values(), scale, band.mid(), r);
    }

    MarkList marks;
    marks.reserve(placed.size());
    for (const auto& p : placed) marks.push_back(Mark::circle(p.x, p.y, r, c));
    return marks;
}

MarkList layout_wilkinson(const Sample& sample, const ScaleX& scale, const Band& band,
                          const RainParams& params, const Rgba& color) {
    if (band.role != BandRole::rain && band.role != BandRole::cloud) {
        throw InvalidParameterError("layout_wilkinson: band role mismatch");
    }
    return wilkinson_marks(sample.values(), scale, band, params.dot_radius,
                           with_opacity(color, params.opacity));
}

MarkList layout_wheat(const Sample& sample, const ScaleX& scale, const Band& band,
                      const RainParams& params, const Rgba& color) {
    require_role(band, BandRole::rain, "layout_wheat");
    const Rgba c = with_opacity(color, params.opacity);
    const int k = params.wheat_bins ? *params.wheat_bins : bin_count(sample, BinRule::sturges);
    const HistogramBins bins = histogram(sample, k);

    std::size_t max_count = 1;
    for (std::size_t n : bins.counts) max_count = std::max(max_count, n);
    const double r =
        autosize_dot_radius(static_cast<int>(max_count), band.height(), params.dot_radius);
    const double h = 2.0 * r;

    // Values stay at their exact x; the i-th value of a bin sits i mark
    // heights above the band bottom.
    std::vector<std::size_t> level(bins.counts.size(), 0);
    const auto nbins = static_cast<long>(bins.counts.size());
    MarkList marks;
    marks.reserve(sample.size());
    for (double v : sample.values()) {
        long idx = 0;
        if (bins.edges.back() > bins.edges.front()) {
            const double width = (bins.edges.back() - bins.edges.front()) / nbins;
            idx = std::clamp(static_cast<long>((v - bins.edges.front()) / width), 0l, nbins - 1);
            while (idx > 0 && v < bins.edges[idx]) --idx;
            while (idx < nbins - 1 && v >= bins.edges[idx + 1]) ++idx;
        }
        const double cy = band.y_bottom - r - h * static_cast<double>(level[idx]++);
        marks.push_back(Mark::circle(scale.apply(v), cy, r, c));
    }
    return marks;
}

MarkList layout_rain(const Sample& sample, const ScaleX& scale, const Band& band,
                     const RainParams& params, const Rgba& color) {
    switch (params.kind) {
        case RainKind::strip: return layout_strip(sample, scale, band, params, color);
        case RainKind::dot: return layout_dot(sample, scale, band, params, color);
        case RainKind::jitter: return layout_jitter(sample, scale, band, params, color);
        case RainKind::beeswarm: return layout_beeswarm(sample, scale, band, params, color);
        case RainKind::wilkinson: return layout_wilkinson(sample, scale, band, params, color);
        case RainKind::wheat: return layout_wheat(sample, scale, band, params, color);
    }
    throw InvalidParameterError("unknown rain kind");
}

namespace {

MarkList cloud_density(const Sample& sample, const ScaleX& scale, const Band& band,
                       const Rgba& color, bool mirrored) {
    const DensityEstimate est = kde(sample);
    double peak = 0.0;
    for (double d : est.density) peak = std::max(peak, d);
    if (peak <= 0.0) peak = 1.0;

    MarkList marks;
    if (!mirrored) {
        const double y_base = band.y_bottom;
        const double v_scale = band.height() / peak;
        std::vector<Vec2> pts;
        pts.reserve(est.x.size() + 2);
        pts.push_back({scale.apply(est.x.front()), y_base});
        for (std::size_t i = 0; i < est.x.size(); ++i) {
            pts.push_back({scale.apply(est.x[i]), y_base - est.density[i] * v_scale});
        }
        pts.push_back({scale.apply(est.x.back()), y_base});
        marks.push_back(Mark::polygon(std::move(pts), color));
    } else {
        const double mid = band.mid();
        const double v_scale = (band.height() / 2.0) / peak;
        std::vector<Vec2> pts;
        pts.reserve(2 * est.x.size());
        for (std::size_t i = 0; i < est.x.size(); ++i) {
            pts.push_back({scale.apply(est.x[i]), mid - est.density[i] * v_scale});
        }
        for (std::size_t i = est.x.size(); i-- > 0;) {
            pts.push_back({scale.apply(est.x[i]), mid + est.density[i] * v_scale});
        }
        marks.push_back(Mark::polygon(std::move(pts), color));
    }
    return marks;
}

MarkList cloud_split_boxplot(const Sample& sample, const ScaleX& scale, const Band& band,
                             const Rgba& color) {
    const SummaryStats stats = summarize(sample);
    const Interval whiskers = whisker_bounds(sample, WhiskerRule::iqr_fence_clamped);
    const double box_top = band.y_bottom - band.height() / 2.0;
    const double box_mid = band.y_bottom - band.height() / 4.0;
    const double x_q1 = scale.apply(stats.q1);
    const double x_q3 = scale.apply(stats.q3);

    MarkList marks;
    const double s = 1.5;
    marks.push_back(Mark::hline(x_q1, x_q3, box_top, color, s));
    marks.push_back(Mark::hline(x_q1, x_q3, band.y_bottom, color, s));
    marks.push_back(Mark::vline(x_q1, box_top, band.y_bottom, color, s));
    marks.push_back(Mark::vline(x_q3, box_top, band.y_bottom, color, s));
    marks.push_back(Mark::vline(scale.apply(stats.median), box_top, band.y_bottom, color, s));
    marks.push_back(Mark::hline(scale.apply(whiskers.lo), x_q1, box_mid, color, s));
    marks.push_back(Mark::hline(x_q3, scale.apply(whiskers.hi), box_mid, color, s));
    return marks;
}

Rgba ramp_color(const Rgba& background, const Rgba& cloud, double t) {
    auto mix = [t](double bg, double fg) {
        return static_cast<std::uint8_t>(std::lround(bg + (fg - bg) * t));
    };
    return Rgba{mix(background.r, cloud.r), mix(background.g, cloud.g), mix(background.b, cloud.b),
                1.0};
}

MarkList cloud_heatmap(const Sample& sample, const ScaleX& scale, const Band& band,
                       const Rgba& color, const Rgba& background) {
    const DensityEstimate est = kde(sample);
    double peak = 0.0;
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < est.density.size(); ++i) {
        if (est.density[i] > peak) {  // strict: ties keep the leftmost cell
            peak = est.density[i];
            argmax = i;
        }
    }
    if (peak <= 0.0) peak = 1.0;

    const double step = est.x.size() > 1 ? est.x[1] - est.x[0] : 1.0;
    const Rgba darkest = ramp_color(background, color, 1.0);
    const Rgba next_darkest = ramp_color(background, color, 254.0 / 255.0);

    MarkList marks;
    marks.reserve(est.x.size());
    for (std::size_t i = 0; i < est.x.size(); ++i) {
        Rgba fill = ramp_color(background, color, est.density[i] / peak);
        if (i == argmax) {
            fill = darkest;
        } else if (fill == darkest) {
            fill = next_darkest;  // keep the darkest cell unique
        }
        const double x0 = scale.apply(est.x[i] - step / 2.0);
        const double x1 = scale.apply(est.x[i] + step / 2.0);
        marks.push_back(Mark::rect(x0, band.y_top, x1 - x0, band.height(), fill));
    }
    return marks;
}

MarkList cloud_histogram(const Sample& sample, const ScaleX& scale, const Band& band,
                         BinRule rule, const Rgba& color) {
    const HistogramBins bins = histogram(sample, rule);
    std::size_t max_count = 1;
    for (std::size_t n : bins.counts) max_count = std::max(max_count, n);

    MarkList marks;
    marks.reserve(bins.counts.size());
    for (std::size_t i = 0; i < bins.counts.size(); ++i) {
        if (bins.counts[i] == 0) continue;
        const double height =
            band.height() * static_cast<double>(bins.counts[i]) / static_cast<double>(max_count);
        const double x0 = scale.apply(bins.edges[i]);
        const double x1 = scale.apply(bins.edges[i + 1]);
        marks.push_back(Mark::rect(x0, band.y_bottom - height, x1 - x0, height, color));
    }
    return marks;
}

}  // namespace

MarkList layout_cloud(const Sample& sample, const ScaleX& scale, const Band& band,
                      const CloudParams& params, const Rgba& color, const Rgba& background) {
    require_role(band, BandRole::cloud, "layout_cloud");
    switch (params.kind) {
        case CloudKind::density: return cloud_density(sample, scale, band, color, false);
        case CloudKind::violin: return cloud_density(sample, scale, band, color, true);
        case CloudKind::split_boxplot: return cloud_split_boxplot(sample, scale, band, color);
        case CloudKind::heatmap: return cloud_heatmap(sample, scale, band, color, background);
        case CloudKind::histogram:
            return cloud_histogram(sample, scale, band, params.bin_rule, color);
        case CloudKind::quantile_dotplot: {
            const QuantileDots dots = quantile_dots(sample, params.n_dots);
            Band dot_band = band;
            return wilkinson_marks(dots.values, scale, dot_band, 5.0, color);
        }
    }
    throw InvalidParameterError("unknown cloud kind");
}

namespace {

void add_whisker(MarkList& marks, double x0, double x1, double y, double cap_half,
                 const Rgba& color, double stroke) {
    marks.push_back(Mark::hline(x0, x1, y, color, stroke));
    marks.push_back(Mark::vline(x0, y - cap_half, y + cap_half, color, stroke));
    marks.push_back(Mark::vline(x1, y - cap_half, y + cap_half, color, stroke));
}

MarkList lightning_boxplot(const SummaryStats& stats, const LightningIntervals& iv,
                           const ScaleX& scale, const Band& band, const Rgba& color) {
    const double mid = band.mid();
    const double half = band.height() * 0.3;
    const double x_q1 = scale.apply(stats.q1);
    const double x_q3 = scale.apply(stats.q3);
    const double s = 1.5;

    MarkList marks;
    add_whisker(marks, scale.apply(iv.whiskers_iqr.lo), x_q1, mid, band.height() * 0.1, color, s);
    add_whisker(marks, x_q3, scale.apply(iv.whiskers_iqr.hi), mid, band.height() * 0.1, color, s);
    marks.push_back(Mark::hline(x_q1, x_q3, mid - half, color, s));
    marks.push_back(Mark::hline(x_q1, x_q3, mid + half, color, s));
    marks.push_back(Mark::vline(x_q1, mid - half, mid + half, color, s));
    marks.push_back(Mark::vline(x_q3, mid - half, mid + half, color, s));
    marks.push_back(Mark::vline(scale.apply(stats.median), mid - half, mid + half, color, 2.0));
    return marks;
}

MarkList lightning_midgap(const SummaryStats& stats, const LightningIntervals& iv,
                          const ScaleX& scale, const Band& band, const Rgba& color) {
    const double mid = band.mid();
    const double s = 1.5;
    MarkList marks;
    // Whisker-to-quartile lines with the central box left out.
    add_whisker(marks, scale.apply(iv.whiskers_iqr.lo), scale.apply(stats.q1), mid,
                band.height() * 0.1, color, s);
    add_whisker(marks, scale.apply(stats.q3), scale.apply(iv.whiskers_iqr.hi), mid,
                band.height() * 0.1, color, s);
    marks.push_back(Mark::vline(scale.apply(stats.median), mid - band.height() * 0.25,
                                mid + band.height() * 0.25, color, 2.0));
    return marks;
}

MarkList lightning_qinterval(const SummaryStats& stats, const LightningIntervals& iv,
                             const ScaleX& scale, const Band& band, const Rgba& color) {
    const double mid = band.mid();
    MarkList marks;
    marks.push_back(Mark::hline(scale.apply(iv.q95.lo), scale.apply(iv.q95.hi), mid, color,
                                std::min(2.0, band.height() / 8.0)));
    marks.push_back(Mark::hline(scale.apply(iv.q66.lo), scale.apply(iv.q66.hi), mid, color,
                                std::min(6.0, band.height() / 3.0)));
    marks.push_back(
        Mark::circle(scale.apply(stats.median), mid, std::min(4.0, band.height() / 4.0), color));
    return marks;
}

MarkList lightning_mean_marker(const SummaryStats& stats, const ScaleX& scale, const Band& band,
                               const Rgba& color) {
    const double mid = band.mid();
    const double x = scale.apply(stats.mean);
    const double arm = std::min(band.height() * 0.3, 8.0);
    MarkList marks;
    marks.push_back(Mark::vline(x, mid - arm, mid + arm, color, 2.0));
    marks.push_back(Mark::hline(x - arm, x + arm, mid, color, 2.0));
    return marks;
}

MarkList lightning_mean_interval(const SummaryStats& stats, const LightningIntervals& iv,
                                 const ScaleX& scale, const Band& band, const Rgba& color) {
    const double mid = band.mid();
    MarkList marks;
    marks.push_back(
        Mark::hline(scale.apply(iv.sd_interval.lo), scale.apply(iv.sd_interval.hi), mid, color,
                    2.0));
    marks.push_back(
        Mark::circle(scale.apply(stats.mean), mid, std::min(3.5, band.height() / 4.0), color));
    return marks;
}

void add_paren_arc(MarkList& marks, double x, double mid, double half_h, double bulge,
                   const Rgba& color) {
    // "("-shaped marker bulging away from the interval center.
    std::vector<Vec2> pts;
    const int segments = 16;
    for (int i = 0; i <= segments; ++i) {
        const double t = -1.0 + 2.0 * static_cast<double>(i) / segments;
        pts.push_back({x + bulge * (1.0 - t * t), mid + half_h * t});
    }
    marks.push_back(Mark::polyline(std::move(pts), color, 1.0));
}

MarkList lightning_moment_plot(const SummaryStats& stats, const LightningIntervals& iv,
                               const ScaleX& scale, const Band& band, const Rgba& color) {
    const double mid = band.mid();
    const double bh = band.height();
    MarkList marks;

    // Range whiskers (full data extent).
    add_whisker(marks, scale.apply(iv.whiskers_range.lo), scale.apply(iv.whiskers_range.hi), mid,
                bh * 0.08, color, 1.0);

    // Abbreviated quartile box.
    const double box_half = bh * 0.18;
    const double x_q1 = scale.apply(stats.q1);
    const double x_q3 = scale.apply(stats.q3);
    marks.push_back(Mark::hline(x_q1, x_q3, mid - box_half, color, 1.5));
    marks.push_back(Mark::hline(x_q1, x_q3, mid + box_half, color, 1.5));
    marks.push_back(Mark::vline(x_q1, mid - box_half, mid + box_half, color, 1.5));
    marks.push_back(Mark::vline(x_q3, mid - box_half, mid + box_half, color, 1.5));

    // Mean as "+".
    const double x_mean = scale.apply(stats.mean);
    const double arm = bh * 0.22;
    marks.push_back(Mark::vline(x_mean, mid - arm, mid + arm, color, 1.5));
    marks.push_back(Mark::hline(x_mean - arm, x_mean + arm, mid, color, 1.5));

    // Median as "T".
    const double x_med = scale.apply(stats.median);
    marks.push_back(Mark::vline(x_med, mid - bh * 0.25, mid + bh * 0.25, color, 1.5));
    marks.push_back(Mark::hline(x_med - 3.5, x_med + 3.5, mid - bh * 0.25, color, 1.5));

    // Skew triangle: apex pointing toward the long tail, offset from the
    // mean proportional to |skewness| and capped at a quarter panel.
    if (stats.skewness != 0.0) {
        const double direction = stats.skewness > 0.0 ? 1.0 : -1.0;
        const double cap = std::abs(scale.range_hi - scale.range_lo) / 4.0;
        const double offset = std::min(30.0 * std::abs(stats.skewness), cap);
        const double apex = x_mean + direction * offset;
        marks.push_back(Mark::polygon({{apex, mid},
                                       {apex - direction * 6.0, mid - 4.0},
                                       {apex - direction * 6.0, mid + 4.0}},
                                      color));
    }

    // One and two standard deviations as larger and smaller "(" markers.
    for (int k = 1; k <= 2; ++k) {
        const double half_h = k == 1 ? bh * 0.35 : bh * 0.22;
        const double lo = stats.mean - k * stats.sd;
        const double hi = stats.mean + k * stats.sd;
        add_paren_arc(marks, scale.apply(lo), mid, half_h, 3.0, color);
        add_paren_arc(marks, scale.apply(hi), mid, half_h, -3.0, color);
    }
    return marks;
}

}  // namespace

MarkList layout_lightning(const SummaryStats& stats, const LightningIntervals& intervals,
                          const ScaleX& scale, const Band& band, const LightningParams& params,
                          const Rgba& color) {
    require_role(band, BandRole::lightning, "layout_lightning");
    switch (params.kind) {
        case LightningKind::boxplot:
            return lightning_boxplot(stats, intervals, scale, band, color);
        case LightningKind::midgap:
            return lightning_midgap(stats, intervals, scale, band, color);
        case LightningKind::qinterval:
            return lightning_qinterval(stats, intervals, scale, band, color);
        case LightningKind::mean_marker:
            return lightning_mean_marker(stats, scale, band, color);
        case LightningKind::mean_interval:
            return lightning_mean_interval(stats, intervals, scale, band, color);
        case LightningKind::moment_plot:
            return lightning_moment_plot(stats, intervals, scale, band, color);
    }
    throw InvalidParameterError("unknown lightning kind");
}

}  // namespace raincloud
