#include "checkers/wave.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "checkers/oracle.hpp"

namespace checkers {

WaveRow::WaveRow(long long t, std::vector<Amplitude> values)
    : t_(t), values_(std::move(values)) {
    if (t_ < 1 || values_.size() != static_cast<std::size_t>(t_)) {
        throw std::invalid_argument("row size must equal t");
    }
}

Amplitude WaveRow::at(long long x) const {
    if (!same_parity(x, t_) || x < x_min() || x > x_max()) return Amplitude(0.0, 0.0);
    return values_[static_cast<std::size_t>((x - x_min()) / 2)];
}

double WaveRow::prob(long long x) const { return std::norm(at(x)); }

double WaveRow::total_probability() const {
    long double sum = 0.0L;
    for (const auto& a : values_) {
        sum += static_cast<long double>(a.real()) * a.real() +
               static_cast<long double>(a.imag()) * a.imag();
    }
    return static_cast<double>(sum);
}

WaveEvolver::WaveEvolver(const Params& params) {
    params.validate();
    mu_ = params.mass_eps();
    nu_ = 1.0 / std::sqrt(1.0 + mu_ * mu_);
    pr_ = {1.0};
    pi_ = {0.0};
    mr_ = {0.0};
    mi_ = {0.0};
}

void WaveEvolver::step() {
    const std::size_t n_old = static_cast<std::size_t>(t_);
    const std::size_t n_new = n_old + 1;
    qr_.resize(n_new);
    qi_.resize(n_new);
    nr_.resize(n_new);
    ni_.resize(n_new);

    const double nu = nu_, mu = mu_;
    const double* pr = pr_.data();
    const double* pi = pi_.data();
    const double* mr = mr_.data();
    const double* mi = mi_.data();
    double* qr = qr_.data();
    double* qi = qi_.data();
    double* nr = nr_.data();
    double* ni = ni_.data();

    // new cell j takes the up-right component from old j-1 and the up-left
    // component from old j; a turn multiplies by -i*mu
    qr[0] = 0.0;
    qi[0] = 0.0;
    nr[0] = nu * (mr[0] + mu * pi[0]);
    ni[0] = nu * (mi[0] - mu * pr[0]);
    for (std::size_t j = 1; j < n_old; ++j) {
        qr[j] = nu * (pr[j - 1] + mu * mi[j - 1]);
        qi[j] = nu * (pi[j - 1] - mu * mr[j - 1]);
        nr[j] = nu * (mr[j] + mu * pi[j]);
        ni[j] = nu * (mi[j] - mu * pr[j]);
    }
    qr[n_old] = nu * (pr[n_old - 1] + mu * mi[n_old - 1]);
    qi[n_old] = nu * (pi[n_old - 1] - mu * mr[n_old - 1]);
    nr[n_old] = 0.0;
    ni[n_old] = 0.0;

    pr_.swap(qr_);
    pi_.swap(qi_);
    mr_.swap(nr_);
    mi_.swap(ni_);
    ++t_;
}

void WaveEvolver::advance_to(long long t) {
    if (t < t_) throw std::invalid_argument("cannot evolve backwards");
    const std::size_t cap = static_cast<std::size_t>(t);
    pr_.reserve(cap);
    pi_.reserve(cap);
    mr_.reserve(cap);
    mi_.reserve(cap);
    qr_.reserve(cap);
    qi_.reserve(cap);
    nr_.reserve(cap);
    ni_.reserve(cap);
    while (t_ < t) step();
}

Amplitude WaveEvolver::amplitude(long long x) const {
    if (!supported(x)) return Amplitude(0.0, 0.0);
    const std::size_t j = index(x);
    // a = i * (p + m)
    return Amplitude(-(pi_[j] + mi_[j]), pr_[j] + mr_[j]);
}

double WaveEvolver::re_at(long long x) const {
    if (!supported(x)) return 0.0;
    const std::size_t j = index(x);
    return -(pi_[j] + mi_[j]);
}

double WaveEvolver::im_at(long long x) const {
    if (!supported(x)) return 0.0;
    const std::size_t j = index(x);
    return pr_[j] + mr_[j];
}

WaveRow WaveEvolver::row() const {
    std::vector<Amplitude> values(static_cast<std::size_t>(t_));
    for (std::size_t j = 0; j < values.size(); ++j) {
        values[j] = Amplitude(-(pi_[j] + mi_[j]), pr_[j] + mr_[j]);
    }
    return WaveRow(t_, std::move(values));
}

double WaveEvolver::total_probability() const {
    long double sum = 0.0L;
    for (std::size_t j = 0; j < pr_.size() && j < static_cast<std::size_t>(t_); ++j) {
        const long double re = pi_[j] + mi_[j];
        const long double im = pr_[j] + mr_[j];
        sum += re * re + im * im;
    }
    return static_cast<double>(sum);
}

WaveRow wave_row(long long t, const Params& params) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    WaveEvolver evolver(params);
    evolver.advance_to(t);
    return evolver.row();
}

Amplitude amplitude(LatticePoint p, const Params& params) {
    if (p.t < 1) throw std::invalid_argument("t must be >= 1");
    params.validate();
    if (!reachable(p.x, p.t)) return Amplitude(0.0, 0.0);
    WaveEvolver evolver(params);
    evolver.advance_to(p.t);
    return evolver.amplitude(p.x);
}

double probability(LatticePoint p, const Params& params) {
    return std::norm(amplitude(p, params));
}

double a1_tilde(long long x, long long t, const Params& params) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    return amplitude(LatticePoint{x, t + 1}, params).real();
}

double a2_tilde(long long x, long long t, const Params& params) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    return amplitude(LatticePoint{x + 1, t + 1}, params).imag();
}

ScalarRow a1_row(const WaveEvolver& evolver) {
    const long long tau = evolver.t();
    ScalarRow row;
    row.t = tau - 1;
    row.x_min = 2 - tau;
    row.v.resize(static_cast<std::size_t>(tau));
    for (long long j = 0; j < tau; ++j) {
        row.v[static_cast<std::size_t>(j)] = evolver.re_at(row.x_min + 2 * j);
    }
    return row;
}

Amplitude amplitude_physical(double x, double t, const Params& params) {
    params.validate();
    const long long xl = to_lattice(x, params.eps);
    const long long tl = to_lattice(t, params.eps);
    return amplitude(LatticePoint{xl, tl}, params);
}

bool rescale_check(double x, double t, const Params& params, double tol) {
    params.validate();
    const long long xl = to_lattice(x, params.eps);
    const long long tl = to_lattice(t, params.eps);
    if (tl < 1) throw std::invalid_argument("t must be positive");

    const Params lattice_params{params.mass_eps(), 1.0};
    const Amplitude rhs = amplitude(LatticePoint{xl, tl}, lattice_params);
    const Amplitude lhs = tl <= kOracleMaxT
                              ? brute_force_amplitude(LatticePoint{xl, tl}, params)
                              : amplitude(LatticePoint{xl, tl}, params);
    return std::abs(lhs - rhs) <= tol;
}

}  // namespace checkers
