#pragma once

#include <cstdint>

namespace walkmax {

// splitmix64 finalizer; also used to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

double inverse_normal_cdf(double p);

/// xoshiro256** generator with counter-derived substreams.
///
/// A stochastic computation owns one RandomState per logical work unit
/// (replication, chunk). substream(seed, i) is a pure function of its
/// arguments, so results never depend on which thread runs which unit.
class RandomState {
public:
    explicit RandomState(std::uint64_t seed) noexcept { seed_state(mix64(seed + 0x9E3779B97F4A7C15ULL)); }

    static RandomState substream(std::uint64_t seed, std::uint64_t index) noexcept {
        RandomState r(no_init_tag{});
        r.seed_state(mix64(seed ^ mix64(0x9E3779B97F4A7C15ULL * (index + 1) + 0x632BE59BD9B4E019ULL)));
        return r;
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0,1): midpoints of a 2^52 grid.
    /// Never returns 0 or 1, so inverse-transform samplers get exact tails.
    double next_open01() noexcept {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    double next_exponential() noexcept;  // Exp(1)
    double next_normal() noexcept;       // N(0,1) via inverse CDF

private:
    struct no_init_tag {};
    explicit RandomState(no_init_tag) noexcept {}

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    void seed_state(std::uint64_t v) noexcept {
        // splitmix64 stream to fill the state; never all-zero.
        std::uint64_t sm = v;
        for (auto& w : s_) {
            sm += 0x9E3779B97F4A7C15ULL;
            w = mix64(sm);
        }
        s_[0] |= 1;
    }

    std::uint64_t s_[4];
};

/// Exact Poisson draw (sum of <=512-mean blocks, Knuth product method per block).
std::uint64_t sample_poisson(RandomState& rng, double mean);

}  // namespace walkmax
