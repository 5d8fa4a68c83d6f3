#include "hrte/rng.hpp"

#include <cmath>

namespace hrte {
namespace rng {

cplx mode_gaussian(std::uint64_t seed, const int* kvec, int n) {
    std::uint64_t h = mix(seed);
    for (int a = 0; a < n; ++a)
        h = combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(kvec[a])));
    const double u1 = uniform(h);
    const double u2 = uniform(mix(h ^ 0xda3e39cb94b95bdbULL));
    const double r = std::sqrt(-2.0 * std::log(u1));
    return cplx(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
}

} // namespace rng
} // namespace hrte
