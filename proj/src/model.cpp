#include "thermo/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "thermo/errors.hpp"

namespace thermo {

Time Instance::horizon() const {
    Time h = 0;
    for (const auto& j : jobs) h = std::max(h, j.deadline);
    return h;
}

const Job* Instance::find(JobId id) const {
    for (const auto& j : jobs) {
        if (j.id == id) return &j;
    }
    return nullptr;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Thermal: return "thermal";
        case ViolationKind::OutsideWindow: return "outside-window";
        case ViolationKind::UnknownJob: return "unknown-job";
        case ViolationKind::DuplicateJob: return "duplicate-job";
    }
    return "?";
}

std::optional<ViolationKind> violation_kind_from_string(std::string_view text) {
    for (auto k : {ViolationKind::Thermal, ViolationKind::OutsideWindow, ViolationKind::UnknownJob,
                   ViolationKind::DuplicateJob}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

std::vector<StructuralError> validate_instance(const Instance& instance) {
    std::vector<StructuralError> errors;
    const auto& cfg = instance.config;
    if (cfg.threshold <= Rational(0)) {
        errors.push_back({std::nullopt, "threshold", "threshold must be positive"});
    }
    if (cfg.cooling_factor <= Rational(1)) {
        errors.push_back({std::nullopt, "cooling_factor", "cooling factor must exceed 1"});
    }

    std::map<JobId, int> seen;
    for (const auto& j : instance.jobs) {
        if (++seen[j.id] == 2) {
            errors.push_back({j.id, "id", "duplicate job id " + std::to_string(j.id)});
        }
        if (j.release < 0) {
            errors.push_back({j.id, "release", "release time is negative"});
        }
        if (j.deadline <= j.release) {
            errors.push_back({j.id, "deadline",
                              "window-empty: deadline " + std::to_string(j.deadline) +
                                  " is not after release " + std::to_string(j.release)});
        }
        if (j.heat.is_negative()) {
            errors.push_back({j.id, "heat", "heat contribution is negative"});
        }
    }
    return errors;
}

void require_valid(const Instance& instance) {
    auto errors = validate_instance(instance);
    if (errors.empty()) return;
    const auto& e = errors.front();
    std::string where = e.job ? "job " + std::to_string(*e.job) + " " + e.field : e.field;
    throw InvalidInstance(where + ": " + e.message);
}

Rational step_temperature(const Rational& tau, const Rational& heat, const ThermalConfig& config) {
    return (tau + heat) / config.cooling_factor;
}

bool is_admissible(const Rational& tau, const Job& job, const ThermalConfig& config) {
    return step_temperature(tau, job.heat, config) <= config.threshold;
}

SimulationTrace simulate(const Instance& instance, const Schedule& schedule) {
    const Time len = std::max(instance.horizon(), schedule.length());

    std::unordered_map<JobId, const Job*> by_id;
    for (const auto& j : instance.jobs) by_id.emplace(j.id, &j);

    SimulationTrace trace;
    trace.temperatures.reserve(static_cast<std::size_t>(len) + 1);
    trace.temperatures.emplace_back(0);

    std::set<JobId> executed;
    std::set<JobId> completed;
    for (Time u = 0; u < len; ++u) {
        const Rational& tau = trace.temperatures.back();
        const auto slot = u < schedule.length() ? schedule.slots[u] : std::nullopt;
        if (!slot) {
            trace.temperatures.push_back(step_temperature(tau, Rational(0), instance.config));
            continue;
        }

        auto it = by_id.find(*slot);
        if (it == by_id.end()) {
            trace.violations.push_back({u, ViolationKind::UnknownJob, *slot});
            trace.temperatures.push_back(step_temperature(tau, Rational(0), instance.config));
            continue;
        }
        const Job& job = *it->second;
        bool clean = true;
        if (!executed.insert(job.id).second) {
            trace.violations.push_back({u, ViolationKind::DuplicateJob, job.id});
            clean = false;
        }
        if (!job.pending_at(u)) {
            trace.violations.push_back({u, ViolationKind::OutsideWindow, job.id});
            clean = false;
        }
        Rational next = step_temperature(tau, job.heat, instance.config);
        if (next > instance.config.threshold) {
            trace.violations.push_back({u, ViolationKind::Thermal, job.id});
            clean = false;
        }
        if (clean) completed.insert(job.id);
        trace.temperatures.push_back(std::move(next));
    }

    trace.completed.assign(completed.begin(), completed.end());
    trace.throughput = static_cast<int>(trace.completed.size());
    return trace;
}

int throughput(const SimulationTrace& trace) {
    if (!trace.ok()) {
        const auto& v = trace.violations.front();
        throw InvalidTrace("trace has " + std::to_string(trace.violations.size()) +
                           " violation(s), first: " + std::string(to_string(v.kind)) + " at time " +
                           std::to_string(v.time));
    }
    return trace.throughput;
}

}  // namespace thermo
