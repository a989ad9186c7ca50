#pragma once

#include <cmath>
#include <cstdint>

namespace fdi {

/// Deterministic pseudo-random source with a fixed algorithm (splitmix64),
/// so synthetic fleets are reproducible across builds and platforms.
/// Distribution sampling is implemented here rather than with <random>
/// because the standard distributions are not portable across libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one value per pair of uniforms).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Rejection-sampled truncated normal; `sd` may be 0 (degenerate).
    double truncated_normal(double mean, double sd, double lo, double hi) {
        if (sd <= 0.0) return mean < lo ? lo : (mean > hi ? hi : mean);
        for (int i = 0; i < 1000; ++i) {
            const double x = normal(mean, sd);
            if (x >= lo && x <= hi) return x;
        }
        return mean < lo ? lo : (mean > hi ? hi : mean); // pathological bounds
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang; boosted for shape < 1.
    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u > 0 ? u : 1e-300, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Beta(a, b) as a gamma ratio.
    double beta(double a, double b) {
        const double x = gamma(a);
        const double y = gamma(b);
        return x / (x + y);
    }

private:
    std::uint64_t state_;
};

} // namespace fdi
