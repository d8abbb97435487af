#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latentpag/gaussian.hpp"

namespace latentpag {

/// Seedable, platform-stable generator: mt19937_64 (bit-exact by the
/// standard) with hand-rolled variate transforms, so streams never depend on
/// the standard library's unspecified distribution implementations. Normal
/// variates come from the inverse CDF rather than a ziggurat.
class StableRng {
public:
    explicit StableRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform on the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double prob) { return uniform01() < prob; }

    double normal() { return inverse_normal_cdf(uniform01()); }

    /// Uniform integer in [0, n) by masked rejection (no modulo bias).
    std::uint64_t next_below(std::uint64_t n) {
        if (n < 2) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1);
        std::uint64_t x;
        do {
            x = eng_() & mask;
        } while (x >= n);
        return x;
    }

    /// Draws k distinct elements from items (partial Fisher-Yates).
    template <typename T>
    std::vector<T> sample_without_replacement(std::vector<T> items, std::size_t k) {
        for (std::size_t t = 0; t < k && t + 1 < items.size(); ++t) {
            std::size_t pick = t + static_cast<std::size_t>(next_below(items.size() - t));
            std::swap(items[t], items[pick]);
        }
        items.resize(std::min(k, items.size()));
        return items;
    }

private:
    std::mt19937_64 eng_;
};

/// Independent stream seed derived from a base seed (splitmix64 mix).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace latentpag
