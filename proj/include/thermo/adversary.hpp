#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thermo/online.hpp"
#include "thermo/solver.hpp"

namespace thermo {

/// Transcript of the two-branch adversary game against one deterministic policy.
struct AdversaryTranscript {
    Instance revealed;
    OnlineRun algorithm;
    Schedule adversary;
    SimulationTrace adversary_trace;
    int branch = 0;  // 1: the policy ran job 1 at time 0
    int alg_throughput = 0;
    int adv_throughput = 0;
};

/// Releases 1 = (0,3,6/5). If the policy runs it at time 0, releases 2 = (1,2,8/5) at
/// time 1 and the adversary plays idle, 2, 1. Otherwise releases 3 = (2,3,8/5) at time 2
/// and the adversary plays 1, idle, 3. The adversary always completes two jobs.
AdversaryTranscript run_lower_bound_game(const Policy& policy);

struct RandomModel {
    std::size_t jobs = 5;
    Time release_span = 6;  // releases uniform in [0, release_span]
    Time max_window = 4;    // window length uniform in [1, max_window]
    std::uint64_t seed = 0;

    bool operator==(const RandomModel&) const = default;
};

/// Pure function of the model: n jobs with ids 1..n and heats k/16, 0 <= k <= 32.
Instance random_instance(const RandomModel& model);

struct NamedPolicy {
    std::string name;
    Policy policy;
};

struct RatioRecord {
    std::uint64_t seed = 0;
    int opt = 0;
    bool proven_optimal = true;
    std::map<std::string, int> throughput;  // per policy name

    bool operator==(const RatioRecord&) const = default;
};

struct PolicySummary {
    Rational max_ratio{0};
    Rational mean_ratio{0};
    std::size_t counted = 0;
    std::vector<std::uint64_t> counterexamples;  // seeds with throughput < ceil(OPT/2)

    bool operator==(const PolicySummary&) const = default;
};

struct RatioReport {
    RandomModel model;
    std::vector<RatioRecord> records;  // ascending seed
    std::map<std::string, PolicySummary> summaries;
    std::size_t opt_zero_skips = 0;
    std::size_t budget_capped = 0;

    bool has_counterexample() const;
    bool operator==(const RatioReport&) const = default;
};

/// Instance i uses seed model.seed + i. OPT = 0 instances are recorded but excluded from
/// ratio aggregates.
RatioReport ratio_experiment(const RandomModel& model, const std::vector<NamedPolicy>& policies,
                             std::size_t count, const SolverOptions& solver = {});

/// Folds per-instance records into summaries; exposed so fixed instance families can be
/// reported the same way.
void summarize(RatioReport& report, const std::vector<std::string>& policy_names);

}  // namespace thermo
