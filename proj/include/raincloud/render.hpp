#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raincloud/layout.hpp"
#include "raincloud/stats.hpp"

namespace raincloud {

struct RolePalette {
    Rgba cloud{128, 128, 128, 1.0};
    Rgba rain{70, 130, 180, 1.0};
    Rgba lightning{218, 165, 32, 1.0};
    Rgba background{255, 255, 255, 1.0};

    bool operator==(const RolePalette&) const = default;
};

/// Declarative description of one raincloud panel.
struct RaincloudSpec {
    CloudParams cloud;
    RainParams rain;
    std::optional<LightningParams> lightning = LightningParams{};
    int width = 400;
    int height = 160;
    double margin = 10.0;
    std::array<double, 3> band_fractions{0.40, 0.35, 0.25};  // cloud, rain, lightning
    std::optional<std::pair<double, double>> domain;          // data units; else sample range
    RolePalette colors;
};

/// Row-major RGBA bytes; alpha is fully opaque after compositing.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 4 * width * height

    const std::uint8_t* at(int x, int y) const { return pixels.data() + 4 * (y * width + x); }
    std::uint8_t* at(int x, int y) { return pixels.data() + 4 * (y * width + x); }

    bool operator==(const RasterImage&) const = default;
};

struct PanelBands {
    Band cloud;
    Band rain;
    Band lightning;
};

/// Splits the vertical interior [margin, height - margin] into the three
/// role bands, top to bottom: cloud, rain, lightning.
PanelBands panel_bands(const RaincloudSpec& spec);

/// Domain from spec.domain when fixed, else the sample range (a degenerate
/// range is padded by +-0.5); pixel range [margin, width - margin].
ScaleX make_scale(const Sample& sample, const RaincloudSpec& spec);

/// Paints marks in list order over the background. Filled shapes use a
/// pixel-center-in-shape coverage test, lines a distance test against the
/// stroked segment; no anti-aliasing, so output is bit-stable.
RasterImage rasterize(const MarkList& marks, const RaincloudSpec& spec);

/// Full pipeline: scale, cloud/rain/lightning layouts, rasterize.
/// Paint order is cloud, rain, lightning.
RasterImage render_raincloud(const Sample& sample, const RaincloudSpec& spec);

/// Marks of a single role only, same scale and band geometry.
RasterImage render_component(const Sample& sample, const RaincloudSpec& spec, BandRole role);

/// Binary PPM P6: "P6\n<w> <h>\n255\n" followed by row-major RGB bytes.
std::string ppm_bytes(const RasterImage& image);
void write_ppm(const RasterImage& image, const std::filesystem::path& path);

/// 8-bit RGB PNG for human viewing; comparisons use PPM or in-memory buffers.
std::string png_bytes(const RasterImage& image);
void write_png(const RasterImage& image, const std::filesystem::path& path);

/// Short design label, e.g. "density-jitter-boxplot".
std::string design_name(const RaincloudSpec& spec);

const char* to_string(CloudKind kind);
const char* to_string(RainKind kind);
const char* to_string(LightningKind kind);

/// The full design registry: 6 clouds x 6 rains x (5 lightnings + none),
/// default parameters, enumerated cloud-major. moment_plot stays available
/// as a lightning kind but is not part of the enumeration.
std::vector<RaincloudSpec> registry_216();

}  // namespace raincloud
