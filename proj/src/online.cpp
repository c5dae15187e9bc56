#include "thermo/online.hpp"

#include <algorithm>
#include <stdexcept>

#include "thermo/errors.hpp"

namespace thermo {

void OnlineSession::reveal(Job job) {
    if (job.release < now_) {
        throw std::invalid_argument("job " + std::to_string(job.id) + " revealed at time " +
                                    std::to_string(now_) + " after its release " +
                                    std::to_string(job.release));
    }
    if (revealed_.find(job.id) != nullptr) {
        throw std::invalid_argument("job id " + std::to_string(job.id) + " revealed twice");
    }
    revealed_.jobs.push_back(std::move(job));
}

std::vector<Job> OnlineSession::pending() const {
    std::vector<Job> out;
    for (const auto& j : revealed_.jobs) {
        if (j.pending_at(now_) && std::find(done_.begin(), done_.end(), j.id) == done_.end()) {
            out.push_back(j);
        }
    }
    std::sort(out.begin(), out.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    return out;
}

const PolicyDecision& OnlineSession::step(const Policy& policy) {
    DecisionRecord rec;
    rec.time = now_;
    rec.temperature = temperature_;
    rec.pending = pending();

    PolicyView view{now_, temperature_, rec.pending, decisions_, config_};
    rec.decision = policy(view);

    Rational heat{0};
    if (rec.decision.job) {
        const JobId id = *rec.decision.job;
        auto it = std::find_if(rec.pending.begin(), rec.pending.end(),
                               [id](const Job& j) { return j.id == id; });
        if (it == rec.pending.end()) {
            throw PolicyViolation("time " + std::to_string(now_) + ": job " + std::to_string(id) +
                                  " is not pending");
        }
        if (!is_admissible(temperature_, *it, config_)) {
            throw PolicyViolation("time " + std::to_string(now_) + ": job " + std::to_string(id) +
                                  " is not admissible at temperature " + temperature_.str());
        }
        heat = it->heat;
        done_.push_back(id);
    }

    temperature_ = step_temperature(temperature_, heat, config_);
    schedule_.slots.push_back(rec.decision.job);
    decisions_.push_back(std::move(rec));
    ++now_;
    return decisions_.back().decision;
}

OnlineRun OnlineSession::finish(Time horizon) const {
    OnlineRun run;
    run.schedule = schedule_;
    if (run.schedule.length() < horizon) run.schedule.slots.resize(horizon);
    run.trace = simulate(revealed_, run.schedule);
    run.decisions = decisions_;
    return run;
}

OnlineRun run_online(const Instance& instance, const Policy& policy) {
    require_valid(instance);
    std::vector<Job> by_release = instance.jobs;
    std::stable_sort(by_release.begin(), by_release.end(),
                     [](const Job& a, const Job& b) { return a.release < b.release; });

    OnlineSession session(instance.config);
    const Time horizon = instance.horizon();
    auto next = by_release.begin();
    for (Time u = 0; u < horizon; ++u) {
        while (next != by_release.end() && next->release == u) session.reveal(*next++);
        session.step(policy);
    }
    return session.finish(horizon);
}

namespace {

template <typename Less>
PolicyDecision pick_admissible(const PolicyView& view, Less less) {
    const Job* best = nullptr;
    for (const auto& j : view.pending) {
        if (!is_admissible(view.temperature, j, view.config)) continue;
        if (best == nullptr || less(j, *best)) best = &j;
    }
    return best ? PolicyDecision::execute(best->id) : PolicyDecision::idle();
}

}  // namespace

PolicyDecision coolest_first_decide(const PolicyView& view) {
    return pick_admissible(view, [](const Job& a, const Job& b) {
        if (a.heat != b.heat) return a.heat < b.heat;
        if (a.deadline != b.deadline) return a.deadline < b.deadline;
        return a.id < b.id;
    });
}

PolicyDecision edf_decide(const PolicyView& view) {
    return pick_admissible(view, [](const Job& a, const Job& b) {
        if (a.deadline != b.deadline) return a.deadline < b.deadline;
        if (a.heat != b.heat) return a.heat < b.heat;
        return a.id < b.id;
    });
}

PolicyDecision always_idle_decide(const PolicyView&) { return PolicyDecision::idle(); }

std::optional<Policy> policy_by_name(const std::string& name) {
    if (name == "coolest") return Policy(coolest_first_decide);
    if (name == "edf") return Policy(edf_decide);
    if (name == "idle") return Policy(always_idle_decide);
    return std::nullopt;
}

bool strictly_dominates(const Job& j, const Job& k) {
    return j.heat <= k.heat && j.deadline <= k.deadline &&
           (j.heat < k.heat || j.deadline < k.deadline);
}

std::vector<ReasonableViolation> check_reasonable(const OnlineRun& run, const ThermalConfig& config) {
    std::vector<ReasonableViolation> out;
    for (const auto& rec : run.decisions) {
        if (rec.decision.is_idle()) {
            for (const auto& j : rec.pending) {
                if (is_admissible(rec.temperature, j, config)) {
                    out.push_back({rec.time, ReasonableViolationKind::NonWaiting, std::nullopt, j.id});
                    break;
                }
            }
            continue;
        }
        auto executed = std::find_if(rec.pending.begin(), rec.pending.end(),
                                     [&](const Job& j) { return j.id == *rec.decision.job; });
        if (executed == rec.pending.end()) continue;  // run_online never records this
        for (const auto& j : rec.pending) {
            if (j.id != executed->id && strictly_dominates(j, *executed)) {
                out.push_back({rec.time, ReasonableViolationKind::Dominance, executed->id, j.id});
                break;
            }
        }
    }
    return out;
}

}  // namespace thermo
