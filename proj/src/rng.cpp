#include "walkmax/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "walkmax/normal.hpp"

namespace walkmax {

double RandomState::next_exponential() noexcept {
    return -std::log(next_open01());
}

double RandomState::next_normal() noexcept {
    return inverse_normal_cdf(next_open01());
}

std::uint64_t sample_poisson(RandomState& rng, double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) throw std::invalid_argument("sample_poisson: mean must be finite and >= 0");
    std::uint64_t total = 0;
    // Poisson(m) = sum of independent Poisson blocks; keeps exp(-block) well above underflow.
    while (mean > 0.0) {
        const double block = mean > 512.0 ? 512.0 : mean;
        mean -= block;
        const double limit = std::exp(-block);
        double prod = rng.next_open01();
        std::uint64_t k = 0;
        while (prod > limit) {
            ++k;
            prod *= rng.next_open01();
        }
        total += k;
    }
    return total;
}

}  // namespace walkmax
