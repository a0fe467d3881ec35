#pragma once

// Floating-point engine: two-component dynamic programming over rows,
// grouping paths by their last move. The per-step factor 1/sqrt(1+(m*eps)^2)
// is folded into the recursion, so stored magnitudes stay O(1) for any t.

#include <vector>

#include "checkers/params.hpp"

namespace checkers {

// All amplitudes at fixed time t, supported on x in {2-t, 4-t, ..., t}.
class WaveRow {
public:
    WaveRow(long long t, std::vector<Amplitude> values);

    long long t() const { return t_; }
    long long x_min() const { return 2 - t_; }
    long long x_max() const { return t_; }

    Amplitude at(long long x) const;  // exact 0 off support
    double prob(long long x) const;
    double total_probability() const;
    const std::vector<Amplitude>& values() const { return values_; }

private:
    long long t_;
    std::vector<Amplitude> values_;
};

// Scalar samples over one parity class: value at x_min, x_min + 2, ...
struct ScalarRow {
    long long t = 0;
    long long x_min = 0;
    std::vector<double> v;

    double at(long long x) const {
        if (!same_parity(x, x_min)) return 0.0;
        const long long j = (x - x_min) / 2;
        if (j < 0 || j >= static_cast<long long>(v.size())) return 0.0;
        return v[static_cast<std::size_t>(j)];
    }
};

class WaveEvolver {
public:
    explicit WaveEvolver(const Params& params);

    long long t() const { return t_; }
    void step();
    void advance_to(long long t);

    // current-row accessors; exact 0 off support
    Amplitude amplitude(long long x) const;
    double re_at(long long x) const;
    double im_at(long long x) const;

    WaveRow row() const;
    double total_probability() const;

private:
    std::size_t index(long long x) const {
        return static_cast<std::size_t>((x + t_ - 2) / 2);
    }
    bool supported(long long x) const {
        return same_parity(x, t_) && 2 - t_ <= x && x <= t_;
    }

    double mu_;  // m*eps
    double nu_;  // 1/sqrt(1+mu^2)
    long long t_ = 1;
    // component arrays indexed by j, x = 2 - t + 2j; p = last move up-right,
    // m = last move up-left; ping-pong buffers for the step
    std::vector<double> pr_, pi_, mr_, mi_;
    std::vector<double> qr_, qi_, nr_, ni_;
};

WaveRow wave_row(long long t, const Params& params);
Amplitude amplitude(LatticePoint p, const Params& params);
double probability(LatticePoint p, const Params& params);

// shifted components: a1 = Re a(x, t+1), a2 = Im a(x+1, t+1), lattice units
double a1_tilde(long long x, long long t, const Params& params);
double a2_tilde(long long x, long long t, const Params& params);

// a1 values of the evolver's current row tau, labelled t = tau - 1
ScalarRow a1_row(const WaveEvolver& evolver);

// Physical-coordinate entry point; x and t must be integer multiples of eps.
Amplitude amplitude_physical(double x, double t, const Params& params);

// Eq-(1)-at-physical-coordinates (oracle when t/eps <= 24) against the
// lattice-unit engine run at (m*eps, 1).
bool rescale_check(double x, double t, const Params& params, double tol = 1e-12);

}  // namespace checkers
