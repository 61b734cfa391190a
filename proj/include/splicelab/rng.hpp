// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace splicelab {

/// SplitMix64 with a hand-rolled Box-Muller gaussian. The standard library's
/// distributions are implementation-defined, so generated corpora would not
/// be reproducible across toolchains; this generator pins the byte-exactness
/// contract down to the PRNG itself.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in the open interval (0, 1); never exactly 0 or 1.
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool coin_flip() { return (next() & 1u) != 0; }

    /// Index in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Standard normal via Box-Muller; caches the second deviate.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Mixes a base seed with a task index so parallel and serial corpus runs
/// draw identical per-track streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0xA24BAED4963EE407ull + index * 0x9E3779B97F4A7C15ull));
    return mix.next();
}

}  // namespace splicelab
