#pragma once

#include <cstdint>
#include <optional>

#include "thermo/model.hpp"

namespace thermo {

struct SolverOptions {
    /// Node cap. When hit, the result is the best schedule found so far and
    /// `proven_optimal` is false.
    std::optional<std::uint64_t> node_budget;
};

struct OptResult {
    int best_throughput = 0;
    Schedule witness;
    std::uint64_t explored = 0;
    std::uint64_t memo_hits = 0;
    bool proven_optimal = true;
};

/// Exact maximum throughput by depth-first search over (slot, completed set, temperature).
/// At equal (slot, completed set) a cooler state dominates a hotter one, so only the
/// minimum temperature per key is expanded. Supports at most 64 jobs.
OptResult solve_optimal(const Instance& instance, const SolverOptions& options = {});

inline constexpr std::size_t kBruteForceMaxJobs = 10;
inline constexpr Time kBruteForceMaxHorizon = 16;

/// Independent oracle: enumerates every schedule that places each job at most once inside
/// its window, simulates each one in full and keeps the best violation-free throughput.
/// No temperature pruning, no memoization. Throws TooLarge beyond 10 jobs or horizon 16.
int enumerate_optimal_bruteforce(const Instance& instance);

}  // namespace thermo
