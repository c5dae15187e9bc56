#include "thermo/adversary.hpp"

#include <algorithm>
#include <random>

#include "thermo/errors.hpp"

namespace thermo {

AdversaryTranscript run_lower_bound_game(const Policy& policy) {
    const Job job1{1, 0, 3, Rational(6, 5)};
    const Job job2{2, 1, 2, Rational(8, 5)};
    const Job job3{3, 2, 3, Rational(8, 5)};

    OnlineSession session;
    session.reveal(job1);
    const bool took_job1 = session.step(policy) == PolicyDecision::execute(job1.id);

    AdversaryTranscript t;
    if (took_job1) {
        t.branch = 1;
        session.reveal(job2);
        session.step(policy);
        session.step(policy);
        t.adversary.slots = {std::nullopt, job2.id, job1.id};
    } else {
        t.branch = 2;
        session.step(policy);
        session.reveal(job3);
        session.step(policy);
        t.adversary.slots = {job1.id, std::nullopt, job3.id};
    }

    t.algorithm = session.finish(3);
    t.revealed = session.revealed();
    t.adversary_trace = simulate(t.revealed, t.adversary);
    t.alg_throughput = throughput(t.algorithm.trace);
    t.adv_throughput = throughput(t.adversary_trace);
    return t;
}

Instance random_instance(const RandomModel& model) {
    // mt19937_64 output is fixed by the standard; reduction by modulo keeps the
    // mapping identical across standard libraries.
    std::mt19937_64 rng(model.seed);
    const auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
        return lo + rng() % (hi - lo + 1);
    };

    Instance inst;
    for (std::size_t i = 0; i < model.jobs; ++i) {
        const auto release = static_cast<Time>(uniform(0, static_cast<std::uint64_t>(model.release_span)));
        const auto window = static_cast<Time>(uniform(1, static_cast<std::uint64_t>(std::max<Time>(1, model.max_window))));
        const auto k = static_cast<std::int64_t>(uniform(0, 32));
        inst.jobs.push_back({static_cast<JobId>(i + 1), release, release + window, Rational(k, 16)});
    }
    return inst;
}

bool RatioReport::has_counterexample() const {
    return std::any_of(summaries.begin(), summaries.end(),
                       [](const auto& kv) { return !kv.second.counterexamples.empty(); });
}

void summarize(RatioReport& report, const std::vector<std::string>& policy_names) {
    std::sort(report.records.begin(), report.records.end(),
              [](const RatioRecord& a, const RatioRecord& b) { return a.seed < b.seed; });
    report.summaries.clear();
    report.opt_zero_skips = 0;
    report.budget_capped = 0;
    std::map<std::string, Rational> sums;
    for (const auto& name : policy_names) report.summaries[name];

    for (const auto& rec : report.records) {
        if (!rec.proven_optimal) ++report.budget_capped;
        if (rec.opt == 0) {
            ++report.opt_zero_skips;
            continue;
        }
        for (const auto& name : policy_names) {
            auto& s = report.summaries[name];
            const int alg = rec.throughput.at(name);
            if (2 * alg < rec.opt) s.counterexamples.push_back(rec.seed);  // alg < ceil(opt/2)
            // alg = 0 with opt > 0 is already a counterexample; its ratio is unbounded.
            if (alg == 0) continue;
            const Rational ratio(rec.opt, alg);
            s.max_ratio = std::max(s.max_ratio, ratio);
            sums[name] += ratio;
            ++s.counted;
        }
    }
    for (auto& [name, s] : report.summaries) {
        if (s.counted > 0) s.mean_ratio = sums[name] / Rational(static_cast<std::int64_t>(s.counted));
    }
}

RatioReport ratio_experiment(const RandomModel& model, const std::vector<NamedPolicy>& policies,
                             std::size_t count, const SolverOptions& solver) {
    RatioReport report;
    report.model = model;
    std::vector<std::string> names;
    for (const auto& p : policies) names.push_back(p.name);

    for (std::size_t i = 0; i < count; ++i) {
        RandomModel m = model;
        m.seed = model.seed + i;
        const Instance inst = random_instance(m);

        RatioRecord rec;
        rec.seed = m.seed;
        const OptResult opt = solve_optimal(inst, solver);
        rec.opt = opt.best_throughput;
        rec.proven_optimal = opt.proven_optimal;
        for (const auto& p : policies) {
            rec.throughput[p.name] = throughput(run_online(inst, p.policy).trace);
        }
        report.records.push_back(std::move(rec));
    }
    summarize(report, names);
    return report;
}

}  // namespace thermo
