#pragma once

// Literal path-sum evaluation: every checker path from the origin is
// enumerated one by one. Exponential in t; this is the reference the fast
// engines are tested against, never a production path.

#include <cstdint>
#include <vector>

#include "checkers/bigint.hpp"
#include "checkers/params.hpp"

namespace checkers {

inline constexpr long long kOracleMaxT = 24;

// counts[j][r]: number of paths ending at x = 2 - t + 2j with exactly r turns.
// Parameter-independent; amplitudes for any (m, eps) follow by weighting.
struct TurnCountTable {
    long long t = 0;
    std::vector<std::vector<std::int64_t>> counts;

    long long x_of_index(std::size_t j) const {
        return 2 - t + 2 * static_cast<long long>(j);
    }
};

TurnCountTable brute_force_turn_counts(long long t);

// All amplitudes of row t from a turn-count table.
std::vector<Amplitude> amplitudes_from_counts(const TurnCountTable& table,
                                              const Params& params);

std::vector<Amplitude> brute_force_row(long long t, const Params& params);

// Exact 0 for out-of-cone or parity-invalid points; throws outside 1 <= t <= 24.
Amplitude brute_force_amplitude(LatticePoint p, const Params& params);

// Exact Z[i] path sum at m*eps = 1 by direct enumeration.
GaussianInt brute_force_path_sum(LatticePoint p);

}  // namespace checkers
