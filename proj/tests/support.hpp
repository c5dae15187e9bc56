#pragma once

#include <random>

#include "thermo/adversary.hpp"
#include "thermo/model.hpp"

namespace thermo::testing {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// Four-job example: 1 -> (0,2,0.4), 2 -> (0,4,0.6), 3 -> (2,3,1.9), 4 -> (4,6,0.8).
inline Instance four_job_example() {
    return Instance{{{1, 0, 2, q(2, 5)}, {2, 0, 4, q(3, 5)}, {3, 2, 3, q(19, 10)}, {4, 4, 6, q(4, 5)}}, {}};
}

/// The schedule that idles at slot 1 and completes everything.
inline Schedule four_job_full_schedule() { return {{1, std::nullopt, 3, 2, 4, std::nullopt}}; }

/// Closed form tau_u = sum_{i<u} h(i) / R^(u-i); independent of simulate's step loop.
inline std::vector<Rational> closed_form_temperatures(const Instance& inst, const Schedule& s, Time len) {
    std::vector<Rational> heat(static_cast<std::size_t>(len), Rational(0));
    for (Time i = 0; i < std::min(len, s.length()); ++i) {
        if (s.slots[i]) {
            if (const Job* j = inst.find(*s.slots[i])) heat[i] = j->heat;
        }
    }
    std::vector<Rational> out;
    for (Time u = 0; u <= len; ++u) {
        Rational sum(0);
        for (Time i = 0; i < u; ++i) {
            Rational denom(1);
            for (Time k = 0; k < u - i; ++k) denom *= inst.config.cooling_factor;
            sum += heat[i] / denom;
        }
        out.push_back(sum);
    }
    return out;
}

/// Random schedule that places each job at most once inside its window, choosing only
/// thermally admissible jobs. Always violation-free.
inline Schedule random_feasible_schedule(const Instance& inst, std::mt19937_64& rng) {
    const Time len = inst.horizon();
    Schedule s = Schedule::idle(len);
    std::vector<bool> used(inst.jobs.size(), false);
    Rational tau(0);
    for (Time u = 0; u < len; ++u) {
        std::vector<std::size_t> options;
        for (std::size_t i = 0; i < inst.jobs.size(); ++i) {
            if (!used[i] && inst.jobs[i].pending_at(u) && is_admissible(tau, inst.jobs[i], inst.config)) {
                options.push_back(i);
            }
        }
        Rational heat(0);
        const std::size_t pick = rng() % (options.size() + 1);
        if (pick < options.size()) {
            const auto i = options[pick];
            used[i] = true;
            s.slots[u] = inst.jobs[i].id;
            heat = inst.jobs[i].heat;
        }
        tau = step_temperature(tau, heat, inst.config);
    }
    return s;
}

/// Arbitrary slot contents, including unknown ids and repeats.
inline Schedule random_any_schedule(const Instance& inst, std::mt19937_64& rng) {
    Schedule s = Schedule::idle(inst.horizon());
    for (auto& slot : s.slots) {
        const auto pick = rng() % (inst.jobs.size() + 2);
        if (pick < inst.jobs.size()) slot = inst.jobs[pick].id;
        else if (pick == inst.jobs.size()) slot = 999;
    }
    return s;
}

}  // namespace thermo::testing
