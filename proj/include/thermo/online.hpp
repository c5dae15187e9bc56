#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thermo/model.hpp"

namespace thermo {

/// Execute(job) or StayIdle.
struct PolicyDecision {
    std::optional<JobId> job;

    static PolicyDecision idle() { return {}; }
    static PolicyDecision execute(JobId id) { return {id}; }
    bool is_idle() const { return !job.has_value(); }
    bool operator==(const PolicyDecision&) const = default;
};

/// One slot of an online run: what the policy saw and what it chose.
struct DecisionRecord {
    Time time = 0;
    Rational temperature;
    std::vector<Job> pending;  // ascending id
    PolicyDecision decision;

    bool operator==(const DecisionRecord&) const = default;
};

/// Everything a policy may look at when deciding slot `time`. Only released jobs are visible.
struct PolicyView {
    Time time;
    const Rational& temperature;
    std::span<const Job> pending;
    std::span<const DecisionRecord> history;
    const ThermalConfig& config;
};

using Policy = std::function<PolicyDecision(const PolicyView&)>;

struct OnlineRun {
    Schedule schedule;
    SimulationTrace trace;
    std::vector<DecisionRecord> decisions;

    bool operator==(const OnlineRun&) const = default;
};

/// Incremental online execution. Jobs are revealed no earlier than the current time and
/// the policy is stepped one slot at a time. run_online and the lower-bound game both
/// drive this.
class OnlineSession {
public:
    explicit OnlineSession(ThermalConfig config = {}) : config_(std::move(config)) {}

    /// Throws std::invalid_argument if the job is released in the past or its id repeats.
    void reveal(Job job);

    /// Asks the policy for slot now() and applies the decision.
    /// Throws PolicyViolation on a non-pending or inadmissible choice.
    const PolicyDecision& step(const Policy& policy);

    Time now() const { return now_; }
    const Rational& temperature() const { return temperature_; }
    std::vector<Job> pending() const;
    const Instance& revealed() const { return revealed_; }

    /// Pads with idle slots to `horizon` (no policy calls) and simulates the result.
    OnlineRun finish(Time horizon) const;

private:
    ThermalConfig config_;
    Instance revealed_{{}, config_};
    std::vector<JobId> done_;
    std::vector<DecisionRecord> decisions_;
    Schedule schedule_;
    Rational temperature_{0};
    Time now_ = 0;
};

/// Runs `policy` over slots 0..horizon-1, revealing each job at its release time.
OnlineRun run_online(const Instance& instance, const Policy& policy);

PolicyDecision coolest_first_decide(const PolicyView& view);
PolicyDecision edf_decide(const PolicyView& view);
PolicyDecision always_idle_decide(const PolicyView& view);

/// Looks up a built-in policy: "coolest", "edf" or "idle".
std::optional<Policy> policy_by_name(const std::string& name);

enum class ReasonableViolationKind { NonWaiting, Dominance };

struct ReasonableViolation {
    Time time = 0;
    ReasonableViolationKind kind = ReasonableViolationKind::NonWaiting;
    std::optional<JobId> executed;
    JobId witness = 0;  // the admissible job that was ignored, or the dominating job
};

/// j strictly dominates k: h_j <= h_k and d_j <= d_k with at least one strict.
bool strictly_dominates(const Job& j, const Job& k);

/// Slots where the run idled despite an admissible pending job, or ran a job strictly
/// dominated by another pending job.
std::vector<ReasonableViolation> check_reasonable(const OnlineRun& run, const ThermalConfig& config);

}  // namespace thermo
