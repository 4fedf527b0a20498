#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace hball {

/// Seeded random stream used by grids, scaffolds and test sampling.
///
/// Doubles are produced from raw mt19937_64 output instead of the standard
/// distributions, whose value sequences are implementation-defined; reports
/// generated under a fixed seed must be byte-stable across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (haveSpare_) {
            haveSpare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        haveSpare_ = true;
        return r * std::cos(a);
    }

    std::complex<double> complexGaussian() { return {gaussian(), gaussian()}; }

    std::uint64_t raw() { return eng_(); }

    // Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(bound)) % bound;
    }

private:
    std::mt19937_64 eng_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

}  // namespace hball
