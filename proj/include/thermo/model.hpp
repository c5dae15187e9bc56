#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thermo/rational.hpp"

namespace thermo {

using JobId = std::uint32_t;
using Time = std::int64_t;

/// Unit-length job. Legal start times are release <= t <= deadline - 1.
struct Job {
    JobId id = 0;
    Time release = 0;
    Time deadline = 1;
    Rational heat;

    bool pending_at(Time u) const { return release <= u && u < deadline; }
    bool operator==(const Job&) const = default;
};

struct ThermalConfig {
    Rational threshold{1};
    Rational cooling_factor{2};

    bool operator==(const ThermalConfig&) const = default;
};

struct Instance {
    std::vector<Job> jobs;
    ThermalConfig config;

    /// Largest deadline, 0 for an empty instance.
    Time horizon() const;
    const Job* find(JobId id) const;

    bool operator==(const Instance&) const = default;
};

/// Per-slot assignment; slot u covers [u, u+1]. nullopt is an idle slot.
struct Schedule {
    std::vector<std::optional<JobId>> slots;

    static Schedule idle(Time length) { return {std::vector<std::optional<JobId>>(length)}; }
    Time length() const { return static_cast<Time>(slots.size()); }

    bool operator==(const Schedule&) const = default;
};

enum class ViolationKind { Thermal, OutsideWindow, UnknownJob, DuplicateJob };

std::string_view to_string(ViolationKind kind);
std::optional<ViolationKind> violation_kind_from_string(std::string_view text);

struct Violation {
    Time time = 0;
    ViolationKind kind = ViolationKind::Thermal;
    JobId job = 0;

    bool operator==(const Violation&) const = default;
};

struct SimulationTrace {
    /// tau_0 .. tau_len; tau_0 is always 0.
    std::vector<Rational> temperatures;
    /// Ids of jobs completed without a violation, ascending.
    std::vector<JobId> completed;
    int throughput = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool operator==(const SimulationTrace&) const = default;
};

struct StructuralError {
    std::optional<JobId> job;
    std::string field;
    std::string message;
};

/// Empty iff every job and instance invariant holds.
std::vector<StructuralError> validate_instance(const Instance& instance);

/// Throws InvalidInstance carrying the first structural error, if any.
void require_valid(const Instance& instance);

Rational step_temperature(const Rational& tau, const Rational& heat, const ThermalConfig& config);

bool is_admissible(const Rational& tau, const Job& job, const ThermalConfig& config);

/// Exact slot-by-slot simulation. A schedule shorter than the horizon is padded with idle
/// slots. Temperatures keep being computed past violations; the heat of a known job is
/// applied even when its slot is illegal.
SimulationTrace simulate(const Instance& instance, const Schedule& schedule);

/// Number of completed jobs. Throws InvalidTrace if the trace records any violation.
int throughput(const SimulationTrace& trace);

}  // namespace thermo
