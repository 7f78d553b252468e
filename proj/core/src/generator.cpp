#include "maxdisp/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace maxdisp {

double NormalSampler::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

PointSet generate_normal(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("need at least one item and one feature");
    }
    NormalSampler sampler(seed);
    std::vector<double> data(n * m);
    for (double& value : data) value = sampler.next();
    return PointSet(std::move(data), n, m);
}

} // namespace maxdisp
