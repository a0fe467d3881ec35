#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace checkers {

using Amplitude = std::complex<double>;

// Lattice-unit coordinates (physical coordinate divided by the step).
struct LatticePoint {
    long long x = 0;
    long long t = 1;
};

// Physical parameters. Every engine works in lattice units internally, where
// the dimensionless product m*eps is the only parameter that matters.
struct Params {
    double m = 1.0;    // particle mass
    double eps = 1.0;  // lattice step

    double mass_eps() const { return m * eps; }

    // 1/sqrt(1 + (m*eps)^2): per-step normalization; also the peak velocity
    // bounding the oscillatory region.
    double peak_velocity() const {
        const double mu = mass_eps();
        return 1.0 / std::sqrt(1.0 + mu * mu);
    }

    void validate() const {
        if (!(m >= 0.0)) throw std::invalid_argument("mass must be >= 0");
        if (!(eps > 0.0)) throw std::invalid_argument("lattice step must be > 0");
    }
};

inline bool same_parity(long long x, long long t) { return ((x ^ t) & 1LL) == 0; }

// Points reachable from the origin: x == t (mod 2) and -t < x <= t.
// Everywhere else the amplitude is exactly zero.
inline bool reachable(long long x, long long t) {
    return t >= 1 && same_parity(x, t) && -t < x && x <= t;
}

// Converts a physical coordinate to lattice units; rejects non-multiples.
long long to_lattice(double value, double eps);

}  // namespace checkers
