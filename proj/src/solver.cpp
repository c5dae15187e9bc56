#include "thermo/solver.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "thermo/errors.hpp"

namespace thermo {

namespace {

struct StateKey {
    Time time;
    std::uint64_t done;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        std::uint64_t h = k.done * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(k.time) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

class Search {
public:
    Search(const Instance& instance, const SolverOptions& options)
        : config_(instance.config), horizon_(instance.horizon()), budget_(options.node_budget) {
        jobs_ = instance.jobs;
        // Branch order: earliest deadline, then coolest. Finds good incumbents early.
        std::sort(jobs_.begin(), jobs_.end(), [](const Job& a, const Job& b) {
            if (a.deadline != b.deadline) return a.deadline < b.deadline;
            if (a.heat != b.heat) return a.heat < b.heat;
            return a.id < b.id;
        });
        path_.assign(static_cast<std::size_t>(horizon_), std::nullopt);
        result_.witness = Schedule::idle(horizon_);
    }

    OptResult run() {
        dfs(0, 0, Rational(0), 0);
        result_.proven_optimal = !budget_hit_;
        return std::move(result_);
    }

private:
    // Jobs not yet done that still have a legal slot at or after u.
    int remaining_feasible(Time u, std::uint64_t done) const {
        int count = 0;
        for (std::size_t i = 0; i < jobs_.size(); ++i) {
            if (!(done >> i & 1U) && jobs_[i].deadline > u) ++count;
        }
        return count;
    }

    void dfs(Time u, std::uint64_t done, const Rational& tau, int count) {
        if (budget_hit_) return;
        if (budget_ && result_.explored >= *budget_) {
            budget_hit_ = true;
            return;
        }
        ++result_.explored;

        if (count > result_.best_throughput) {
            result_.best_throughput = count;
            result_.witness.slots.assign(path_.begin(), path_.begin() + u);
            result_.witness.slots.resize(static_cast<std::size_t>(horizon_));
        }
        if (u >= horizon_) return;

        const int bound = count + std::min<int>(remaining_feasible(u, done),
                                                static_cast<int>(horizon_ - u));
        if (bound <= result_.best_throughput) return;

        auto [it, inserted] = memo_.try_emplace(StateKey{u, done}, tau);
        if (!inserted) {
            if (it->second <= tau) {
                ++result_.memo_hits;
                return;
            }
            it->second = tau;
        }

        for (std::size_t i = 0; i < jobs_.size(); ++i) {
            const Job& j = jobs_[i];
            if ((done >> i & 1U) || !j.pending_at(u)) continue;
            Rational next = step_temperature(tau, j.heat, config_);
            if (next > config_.threshold) continue;
            path_[u] = j.id;
            dfs(u + 1, done | (std::uint64_t{1} << i), next, count + 1);
        }
        path_[u] = std::nullopt;
        dfs(u + 1, done, step_temperature(tau, Rational(0), config_), count);
    }

    ThermalConfig config_;
    Time horizon_;
    std::optional<std::uint64_t> budget_;
    std::vector<Job> jobs_;
    std::vector<std::optional<JobId>> path_;
    std::unordered_map<StateKey, Rational, StateKeyHash> memo_;
    OptResult result_;
    bool budget_hit_ = false;
};

class Enumerator {
public:
    explicit Enumerator(const Instance& instance)
        : instance_(instance), horizon_(instance.horizon()), used_(instance.jobs.size(), false) {
        current_ = Schedule::idle(horizon_);
    }

    int run() {
        visit(0);
        return best_;
    }

private:
    void visit(Time u) {
        if (u == horizon_) {
            SimulationTrace trace = simulate(instance_, current_);
            if (trace.ok()) best_ = std::max(best_, trace.throughput);
            return;
        }
        current_.slots[u] = std::nullopt;
        visit(u + 1);
        for (std::size_t i = 0; i < instance_.jobs.size(); ++i) {
            const Job& j = instance_.jobs[i];
            if (used_[i] || !j.pending_at(u)) continue;
            used_[i] = true;
            current_.slots[u] = j.id;
            visit(u + 1);
            used_[i] = false;
        }
        current_.slots[u] = std::nullopt;
    }

    const Instance& instance_;
    Time horizon_;
    std::vector<bool> used_;
    Schedule current_;
    int best_ = 0;
};

}  // namespace

OptResult solve_optimal(const Instance& instance, const SolverOptions& options) {
    require_valid(instance);
    if (instance.jobs.size() > 64) {
        throw TooLarge("solve_optimal supports at most 64 jobs, got " +
                       std::to_string(instance.jobs.size()));
    }
    return Search(instance, options).run();
}

int enumerate_optimal_bruteforce(const Instance& instance) {
    require_valid(instance);
    if (instance.jobs.size() > kBruteForceMaxJobs || instance.horizon() > kBruteForceMaxHorizon) {
        throw TooLarge("brute force limited to " + std::to_string(kBruteForceMaxJobs) +
                       " jobs and horizon " + std::to_string(kBruteForceMaxHorizon));
    }
    return Enumerator(instance).run();
}

}  // namespace thermo
