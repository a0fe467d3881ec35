#include "checkers/exact.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace checkers {

ExactEvolver::ExactEvolver() {
    pre_.emplace_back(1);
    pim_.emplace_back(0);
    mre_.emplace_back(0);
    mim_.emplace_back(0);
}

void ExactEvolver::step() {
    const std::size_t n_old = static_cast<std::size_t>(t_);
    pre_.emplace_back(0);
    pim_.emplace_back(0);
    mre_.emplace_back(0);
    mim_.emplace_back(0);

    // In-place descending sweep. New cell j takes the up-right component from
    // old j-1 and accumulates a turn (-i factor) into the up-left component at j.
    // Rightmost new cell first: only an up-right source exists.
    pre_[n_old] = pre_[n_old - 1] + mim_[n_old - 1];
    pim_[n_old] = pim_[n_old - 1] - mre_[n_old - 1];
    for (std::size_t j = n_old - 1; j > 0; --j) {
        mre_[j] += pim_[j];
        mim_[j] -= pre_[j];
        pre_[j] = pre_[j - 1] + mim_[j - 1];
        pim_[j] = pim_[j - 1] - mre_[j - 1];
    }
    mre_[0] += pim_[0];
    mim_[0] -= pre_[0];
    pre_[0] = 0;
    pim_[0] = 0;
    ++t_;
}

void ExactEvolver::advance_to(long long t) {
    if (t < t_) throw std::invalid_argument("cannot evolve backwards");
    const std::size_t cap = static_cast<std::size_t>(t);
    pre_.reserve(cap);
    pim_.reserve(cap);
    mre_.reserve(cap);
    mim_.reserve(cap);
    while (t_ < t) step();
}

GaussianInt ExactEvolver::sum_at(long long x) const {
    if (!supported(x)) return GaussianInt();
    const std::size_t j = index(x);
    return GaussianInt(pre_[j] + mre_[j], pim_[j] + mim_[j]);
}

int ExactEvolver::sgn_re(long long x) const {
    if (!supported(x)) return 0;
    const std::size_t j = index(x);
    BigInt& s = const_cast<BigInt&>(scratch_re_);
    s = pre_[j] + mre_[j];
    return sgn(s);
}

int ExactEvolver::sgn_im(long long x) const {
    if (!supported(x)) return 0;
    const std::size_t j = index(x);
    BigInt& s = const_cast<BigInt&>(scratch_im_);
    s = pim_[j] + mim_[j];
    return sgn(s);
}

bool ExactEvolver::re_is_zero(long long x) const { return sgn_re(x) == 0; }
bool ExactEvolver::im_is_zero(long long x) const { return sgn_im(x) == 0; }

int ExactEvolver::cmp_abs_im(long long x1, long long x2) const {
    BigInt a, b;
    if (supported(x1)) {
        const std::size_t j = index(x1);
        a = pim_[j] + mim_[j];
    }
    if (supported(x2)) {
        const std::size_t j = index(x2);
        b = pim_[j] + mim_[j];
    }
    return cmp_abs(a, b);
}

int ExactEvolver::cmp_abs_re(long long x1, long long x2) const {
    BigInt a, b;
    if (supported(x1)) {
        const std::size_t j = index(x1);
        a = pre_[j] + mre_[j];
    }
    if (supported(x2)) {
        const std::size_t j = index(x2);
        b = pre_[j] + mre_[j];
    }
    return cmp_abs(a, b);
}

namespace {

// S(x,t) = sum_r (-i)^r N_r with N_r = C(R-1id, u-1) C(L-1, d-1), where R and L
// count up-right/up-left moves, u = ceil((r+1)/2) runs of up-right moves and
// d = floor((r+1)/2) runs of up-left moves (first run goes up-right).
GaussianInt path_sum_closed(long long x, long long t) {
    const unsigned long right = static_cast<unsigned long>((t + x) / 2);
    const unsigned long left = static_cast<unsigned long>((t - x) / 2);
    if (left == 0) return GaussianInt(1, 0);  // single all-up-right path

    std::array<BigInt, 4> acc{};
    BigInt term = 1;  // C(right-1, u-1) * C(left-1, d-1), starting at r = 1
    unsigned long u = 1, d = 1;
    for (unsigned long r = 1; r < static_cast<unsigned long>(t); ++r) {
        acc[r % 4] += term;
        // advance to r+1: u grows on even r+1, d on odd
        if ((r + 1) % 2 == 0) {
            if (u >= right) break;
            term *= static_cast<long>(right - u);
            term /= static_cast<long>(u);
            ++u;
        } else {
            if (d >= left) break;
            term *= static_cast<long>(left - d);
            term /= static_cast<long>(d);
            ++d;
        }
    }
    return GaussianInt(acc[0] - acc[2], acc[3] - acc[1]);
}

}  // namespace

GaussianInt exact_path_sum(LatticePoint p) {
    if (p.t < 1) throw std::invalid_argument("t must be >= 1");
    if (!same_parity(p.x, p.t)) {
        throw std::invalid_argument("x and t must have equal parity");
    }
    if (p.x > p.t || p.x <= -p.t) return GaussianInt();
    return path_sum_closed(p.x, p.t);
}

GaussianInt exact_path_sum_dp(LatticePoint p) {
    if (p.t < 1) throw std::invalid_argument("t must be >= 1");
    if (!same_parity(p.x, p.t)) {
        throw std::invalid_argument("x and t must have equal parity");
    }
    if (p.x > p.t || p.x <= -p.t) return GaussianInt();
    ExactEvolver evolver;
    evolver.advance_to(p.t);
    return evolver.sum_at(p.x);
}

BigInt exact_a1_scaled(long long x, long long t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    if (!reachable(x, t + 1)) return BigInt(0);
    return -exact_path_sum(LatticePoint{x, t + 1}).im;
}

BigInt exact_a2_scaled(long long x, long long t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    if (!reachable(x + 1, t + 1)) return BigInt(0);
    return exact_path_sum(LatticePoint{x + 1, t + 1}).re;
}

double descale(const BigInt& value, long long t) {
    // value * 2^{-t/2}; for odd t the exponent is half-integral
    if (t % 2 == 0) return ldexp_big(value, -t / 2);
    return ldexp_big(value, -(t + 1) / 2) * std::sqrt(2.0);
}

Amplitude amplitude_from_sum(const GaussianInt& s, long long t) {
    // a = i * 2^{(1-t)/2} * S
    return Amplitude(descale(-s.im, t - 1), descale(s.re, t - 1));
}

}  // namespace checkers
