#pragma once

// Exact engines for m*eps = 1. Path weights are powers of -i, so the
// unnormalized sum S(x,t) = sum_paths (-i)^turns lies in Z[i] and evolves by
// big-integer additions alone. The wave function is a(x,t) = i 2^{(1-t)/2} S(x,t).

#include <vector>

#include "checkers/bigint.hpp"
#include "checkers/params.hpp"

namespace checkers {

// Row-by-row Gaussian-integer DP; holds S split into last-move components.
class ExactEvolver {
public:
    ExactEvolver();

    long long t() const { return t_; }
    void step();
    void advance_to(long long t);

    bool supported(long long x) const {
        return same_parity(x, t_) && 2 - t_ <= x && x <= t_;
    }

    GaussianInt sum_at(long long x) const;  // S(x, t); 0 off support

    // allocation-free helpers for scans over the current row
    int sgn_re(long long x) const;
    int sgn_im(long long x) const;
    bool re_is_zero(long long x) const;
    bool im_is_zero(long long x) const;
    // compare |Im S(x1)| against |Im S(x2)| (resp. Re): -1/0/+1
    int cmp_abs_im(long long x1, long long x2) const;
    int cmp_abs_re(long long x1, long long x2) const;

private:
    std::size_t index(long long x) const {
        return static_cast<std::size_t>((x + t_ - 2) / 2);
    }
    long long t_ = 1;
    std::vector<BigInt> pre_, pim_, mre_, mim_;
    BigInt scratch_re_, scratch_im_;
    BigInt zero_;
};

// Single-point S(x,t) through run-count binomials; cost O(t) big-int steps,
// cheap even at t ~ 1e5. Throws on parity-invalid input; returns 0 outside
// the light cone.
GaussianInt exact_path_sum(LatticePoint p);

// Same value through the row DP; quadratic in t, used as a cross-route.
GaussianInt exact_path_sum_dp(LatticePoint p);

// 2^{t/2}-scaled shifted components, exact:
//   a1_tilde(x,t) = exact_a1_scaled(x,t) * 2^{-t/2}   ( = -Im S(x, t+1) )
//   a2_tilde(x,t) = exact_a2_scaled(x,t) * 2^{-t/2}   ( =  Re S(x+1, t+1) )
BigInt exact_a1_scaled(long long x, long long t);
BigInt exact_a2_scaled(long long x, long long t);

// value * 2^{-t/2} as a double
double descale(const BigInt& value, long long t);

// a(x, t) from S(x, t)
Amplitude amplitude_from_sum(const GaussianInt& s, long long t);

}  // namespace checkers
