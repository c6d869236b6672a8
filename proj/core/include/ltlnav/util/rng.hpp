// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#ifndef LTLNAV_UTIL_RNG_HPP
#define LTLNAV_UTIL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace ltlnav {

// Deterministic random stream. std::mt19937_64 supplies the bits; the
// mappings to doubles are spelled out here instead of going through
// std::uniform_real_distribution / std::normal_distribution, whose exact
// output is implementation-defined. Traces must be reproducible byte for
// byte across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    // Standard normal via Box-Muller; one spare cached per pair of draws.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Derive an independent child stream. splitmix64 over (state, tag) so
    // substreams for different components never alias.
    Rng fork(std::uint64_t tag) {
        std::uint64_t z = engine_() ^ (tag + 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return Rng(z ^ (z >> 31));
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ltlnav

#endif  // LTLNAV_UTIL_RNG_HPP
