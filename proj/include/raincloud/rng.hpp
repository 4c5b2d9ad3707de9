#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace raincloud {

/// splitmix64: 64-bit-state generator with the published mixing constants.
/// Chosen so that any implementation language can reproduce the exact
/// sample streams from a single integer seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// 53-bit uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

private:
    std::uint64_t state_;
};

/// Standard-normal stream: Box-Muller over consecutive uniform pairs. The
/// cosine value is emitted first, then the cached sine value, so draw order
/// is a fixed function of the seed.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = gen_.uniform01();  // 1-u1 in (0,1], keeps log finite
        const double u2 = gen_.uniform01();
        const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(theta);
        have_spare_ = true;
        return radius * std::cos(theta);
    }

private:
    SplitMix64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Derives `count` independent sub-stream seeds from one master seed.
inline std::vector<std::uint64_t> sub_seeds(std::uint64_t master, std::size_t count) {
    SplitMix64 gen(master);
    std::vector<std::uint64_t> seeds(count);
    for (auto& s : seeds) s = gen.next();
    return seeds;
}

}  // namespace raincloud
