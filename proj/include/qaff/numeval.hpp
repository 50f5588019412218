#pragma once

#include <complex>
#include <random>

#include "qaff/error.hpp"

namespace qaff {

using Complex = std::complex<double>;

// A numeric evaluation point (q0, v0) with provenance for reproducible
// reports. q0 must be nonzero and not a root of unity up to order 64.
struct NumScalar {
    Complex q{2.0, 0.0};
    Complex v{0.0, 0.0};
    unsigned long seed = 0;

    void validate() const {
        require(std::abs(q) > 1e-12, "InvalidEvaluationPoint", "q must be nonzero");
        Complex p = 1.0;
        for (int k = 1; k <= 64; ++k) {
            p *= q;
            require(std::abs(p - 1.0) > 1e-6, "InvalidEvaluationPoint",
                    "q is numerically a root of unity of order " + std::to_string(k));
        }
    }
};

// Default pseudo-random point: |q0| in [1.1, 1.4] away from resonances,
// |v0| in [0.2, 0.6]. Deterministic in the seed.
inline NumScalar random_point(unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag_q(1.1, 1.4), mag_v(0.2, 0.6), arg(0.0, 6.283185307179586);
    NumScalar p;
    p.seed = seed;
    p.q = std::polar(mag_q(rng), arg(rng));
    p.v = std::polar(mag_v(rng), arg(rng));
    p.validate();
    return p;
}

inline double rel_err(const Complex& a, const Complex& b) {
    double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) / scale;
}

} // namespace qaff
