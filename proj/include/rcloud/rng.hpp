#pragma once

#include <cstdint>
#include <vector>

namespace rcloud {

// SplitMix64 finalizer (Steele, Lea & Flood 2014; Vigna's reference code).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// The project-wide PRNG: SplitMix64. 64-bit state, golden-ratio increment,
// output defined by the published reference implementation, so streams are
// identical on every platform. Callers that must be reproducible document
// their draw order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

    // Unbiased integer in [0, n). Lemire multiply-shift with rejection.
    std::uint64_t below(std::uint64_t n) noexcept {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Fisher-Yates, descending index.
    template <typename T>
    void shuffle(std::vector<T>& v) noexcept {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Uniform k-subset of {0, ..., n-1}, returned ascending.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

// Named stream domains. Every independently seeded stream is derived from
// (seed, domain, index), so parallel and serial schedules consume identical
// streams no matter how work is ordered.
namespace stream {
inline constexpr std::uint64_t exploration = 1;    // index = network_index
inline constexpr std::uint64_t refinement = 2;
inline constexpr std::uint64_t full_training = 3;
inline constexpr std::uint64_t magnitude = 4;
inline constexpr std::uint64_t random_prune = 5;   // index = repeat
inline constexpr std::uint64_t data_split = 6;
}  // namespace stream

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t domain,
                                       std::uint64_t index) noexcept {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
    h = mix64(h ^ mix64(domain + 0xBF58476D1CE4E5B9ULL));
    return mix64(h ^ mix64(index + 0x94D049BB133111EBULL));
}

inline Rng substream(std::uint64_t seed, std::uint64_t domain, std::uint64_t index = 0) noexcept {
    return Rng(substream_seed(seed, domain, index));
}

}  // namespace rcloud
