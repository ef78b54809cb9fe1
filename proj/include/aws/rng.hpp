#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "aws/errors.hpp"

namespace aws {

// splitmix64 finalizer; used for all seed derivation.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Named-stream derivation: one independent stream per concern so that
// changing how one consumer draws never perturbs another. The name is
// folded byte-wise through mix64, then mixed with the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view name) {
    std::uint64_t h = 0x2545f4914f6cdd1dull;
    for (unsigned char c : name) h = mix64(h ^ c);
    return mix64(master ^ h);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index + 0x632be59bd9b4e019ull));
}

// Seeded draw helpers on top of mt19937_64. The distributions are written
// out here because <random> distribution outputs are not pinned by the
// standard; mt19937_64 itself is, so draws are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    static Rng stream(std::uint64_t master, std::string_view name) {
        return Rng(derive_seed(master, name));
    }

    std::uint64_t next_u64() { return engine_(); }

    // [0, 1)
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // [0, n), unbiased via rejection
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw BeliefError("uniform_index: empty range");
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return static_cast<std::size_t>(r % bound);
        }
    }

    // Index draw proportional to (nonnegative, not necessarily normalized)
    // weights. Throws if the total mass is not positive.
    std::size_t categorical(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) {
            if (w > 0.0) total += w;
        }
        if (total <= 0.0) throw BeliefError("categorical: no positive weight");
        double u = uniform01() * total;
        std::size_t last_positive = 0;
        bool seen = false;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] <= 0.0) continue;
            last_positive = i;
            seen = true;
            u -= weights[i];
            if (u < 0.0) return i;
        }
        (void)seen;
        return last_positive;  // guard against accumulated rounding
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace aws
