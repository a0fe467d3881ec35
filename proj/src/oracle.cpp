#include "checkers/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace checkers {

long long to_lattice(double value, double eps) {
    const double q = value / eps;
    const double r = std::nearbyint(q);
    if (std::abs(q - r) > 1e-9 * std::max(1.0, std::abs(q)) ||
        std::abs(r) > 9.0e15) {
        throw std::invalid_argument("coordinate is not an integer multiple of eps");
    }
    return static_cast<long long>(r);
}

TurnCountTable brute_force_turn_counts(long long t) {
    if (t < 1 || t > kOracleMaxT) {
        throw std::invalid_argument("brute force restricted to 1 <= t <= 24");
    }
    TurnCountTable table;
    table.t = t;
    table.counts.assign(static_cast<std::size_t>(t),
                        std::vector<std::int64_t>(static_cast<std::size_t>(t), 0));

    // Bit i of `moves` is move i+1; set means up-left. Move 1 is fixed up-right.
    const std::uint64_t free_moves = 1ULL << (t - 1);
    const std::uint64_t pair_mask = free_moves - 1;  // adjacent pairs (1,2)..(t-1,t)
    for (std::uint64_t lefts = 0; lefts < free_moves; ++lefts) {
        const std::uint64_t moves = lefts << 1;
        const long long x = t - 2 * std::popcount(moves);
        const int turns = std::popcount((moves ^ (moves >> 1)) & pair_mask);
        const std::size_t j = static_cast<std::size_t>((x + t - 2) / 2);
        table.counts[j][static_cast<std::size_t>(turns)] += 1;
    }
    return table;
}

std::vector<Amplitude> amplitudes_from_counts(const TurnCountTable& table,
                                              const Params& params) {
    params.validate();
    const long double mu = params.mass_eps();
    const long long t = table.t;
    const long double norm =
        std::pow(1.0L + mu * mu, static_cast<long double>(1 - t) / 2.0L);

    std::vector<Amplitude> row(table.counts.size());
    for (std::size_t j = 0; j < table.counts.size(); ++j) {
        // accumulate sums of counts * mu^r split by r mod 4, so the powers of
        // -i can be applied exactly afterwards
        long double s[4] = {0.0L, 0.0L, 0.0L, 0.0L};
        long double w = 1.0L;  // mu^r
        for (std::size_t r = 0; r < table.counts[j].size(); ++r) {
            const std::int64_t c = table.counts[j][r];
            if (c != 0) s[r % 4] += static_cast<long double>(c) * w;
            w *= mu;
        }
        // sum_paths (-i mu)^turns = (s0 - s2) + i (s3 - s1); amplitude = i * norm * sum
        const long double re = norm * (s[1] - s[3]);
        const long double im = norm * (s[0] - s[2]);
        row[j] = Amplitude(static_cast<double>(re), static_cast<double>(im));
    }
    return row;
}

std::vector<Amplitude> brute_force_row(long long t, const Params& params) {
    return amplitudes_from_counts(brute_force_turn_counts(t), params);
}

Amplitude brute_force_amplitude(LatticePoint p, const Params& params) {
    if (p.t < 1 || p.t > kOracleMaxT) {
        throw std::invalid_argument("brute force restricted to 1 <= t <= 24");
    }
    params.validate();
    if (!reachable(p.x, p.t)) return Amplitude(0.0, 0.0);
    const auto row = brute_force_row(p.t, params);
    return row[static_cast<std::size_t>((p.x + p.t - 2) / 2)];
}

GaussianInt brute_force_path_sum(LatticePoint p) {
    if (p.t < 1 || p.t > kOracleMaxT) {
        throw std::invalid_argument("brute force restricted to 1 <= t <= 24");
    }
    if (!same_parity(p.x, p.t)) {
        throw std::invalid_argument("x and t must have equal parity");
    }
    if (!reachable(p.x, p.t)) return GaussianInt();

    const auto table = brute_force_turn_counts(p.t);
    const auto& counts = table.counts[static_cast<std::size_t>((p.x + p.t - 2) / 2)];
    std::int64_t s[4] = {0, 0, 0, 0};
    for (std::size_t r = 0; r < counts.size(); ++r) s[r % 4] += counts[r];
    // sum (-i)^r N_r: re from r = 0, 2; im from r = 1, 3
    return GaussianInt(BigInt(s[0] - s[2]), BigInt(s[3] - s[1]));
}

}  // namespace checkers
