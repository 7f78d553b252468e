#ifndef MAXDISP_GENERATOR_HPP
#define MAXDISP_GENERATOR_HPP

#include "maxdisp/types.hpp"

#include <cstdint>
#include <random>

namespace maxdisp {

/// Standard-normal sampler with a fully pinned algorithm: mt19937_64 drives
/// 53-bit uniforms ((x >> 11) * 2^-53) through the Marsaglia polar method,
/// second value of each pair cached. The same seed yields the same sample
/// sequence on every run.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

    double next();

private:
    double uniform01() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// n items with m standard-normal features, filled row-major (item by item,
/// feature by feature) from NormalSampler(seed).
PointSet generate_normal(std::size_t n, std::size_t m, std::uint64_t seed);

} // namespace maxdisp

#endif
