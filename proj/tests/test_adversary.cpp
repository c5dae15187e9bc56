#include "doctest.h"

#include <array>

#include "support.hpp"
#include "thermo/adversary.hpp"
#include "thermo/io.hpp"

using namespace thermo;
using thermo::testing::q;

namespace {

/// Scripted behaviour: at slot u, run job choice[u] (0 = idle) if it is pending and
/// admissible, otherwise idle.
Policy scripted(std::array<int, 3> choice) {
    return [choice](const PolicyView& v) {
        const int want = choice[static_cast<std::size_t>(v.time)];
        for (const auto& j : v.pending) {
            if (static_cast<int>(j.id) == want && is_admissible(v.temperature, j, v.config)) {
                return PolicyDecision::execute(j.id);
            }
        }
        return PolicyDecision::idle();
    };
}

}  // namespace

TEST_CASE("[adversary] game against the built-in policies") {
    const auto cf = run_lower_bound_game(coolest_first_decide);
    CHECK(cf.branch == 1);
    CHECK(cf.alg_throughput == 1);
    CHECK(cf.adv_throughput == 2);
    CHECK(cf.adversary_trace.temperatures == std::vector<Rational>{q(0), q(0), q(4, 5), q(1)});
    CHECK(cf.revealed.jobs.size() == 2);

    const auto edf = run_lower_bound_game(edf_decide);
    CHECK(edf.branch == 1);
    CHECK(edf.alg_throughput == 1);
    CHECK(edf.adv_throughput == 2);

    const auto idle = run_lower_bound_game(always_idle_decide);
    CHECK(idle.branch == 2);
    CHECK(idle.alg_throughput == 0);
    CHECK(idle.adv_throughput == 2);
    CHECK(idle.adversary_trace.temperatures == std::vector<Rational>{q(0), q(3, 5), q(3, 10), q(19, 20)});
    // Job 3 is revealed only at its release time.
    CHECK(idle.algorithm.decisions[1].pending.size() == 1);
    CHECK(idle.algorithm.decisions[2].pending.size() == 2);
}

TEST_CASE("[adversary] every scripted behaviour completes at most one job") {
    int played = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            for (int c = 0; c < 4; ++c) {
                const auto t = run_lower_bound_game(scripted({a, b, c}));
                CHECK(t.alg_throughput <= 1);
                CHECK(t.adv_throughput == 2);
                CHECK(t.adversary_trace.ok());
                ++played;
            }
        }
    }
    CHECK(played == 64);
}

TEST_CASE("[adversary] random_instance") {
    CHECK(random_instance({0, 5, 3, 1}).jobs.empty());
    CHECK(random_instance({5, 5, 3, 42}) == random_instance({5, 5, 3, 42}));
    CHECK_FALSE(random_instance({5, 5, 3, 42}) == random_instance({5, 5, 3, 43}));
    for (const auto& j : random_instance({5, 5, 3, 42}).jobs) {
        CHECK(j.release < j.deadline);
        CHECK(j.heat >= q(0));
        CHECK(j.heat <= q(2));
        CHECK(j.heat * q(16) == Rational((j.heat * q(16)).numerator(), BigInt(1)));
    }
}

TEST_CASE("[adversary] ratio_experiment") {
    const std::vector<NamedPolicy> policies{{"coolest", coolest_first_decide}, {"edf", edf_decide}};

    const auto empty = ratio_experiment({5, 6, 4, 0}, policies, 0);
    CHECK(empty.records.empty());
    CHECK(empty.summaries.at("coolest").counted == 0);

    const RandomModel model{6, 7, 4, 1000};
    const auto report = ratio_experiment(model, policies, 150);
    CHECK_FALSE(report.has_counterexample());
    CHECK(report.records.size() == 150);
    for (const auto& [name, s] : report.summaries) {
        CHECK(s.max_ratio <= q(2));
        CHECK(s.counted + report.opt_zero_skips == 150);
    }
    CHECK(serialize_report(ratio_experiment(model, policies, 150)) == serialize_report(report));

    // Always idling is flagged.
    const auto bad = ratio_experiment(model, {{"idle", always_idle_decide}}, 20);
    CHECK(bad.has_counterexample());
}

TEST_CASE("[adversary] fixed lower-bound family reaches ratio 2") {
    const std::vector<NamedPolicy> policies{{"coolest", coolest_first_decide}, {"edf", edf_decide}};
    const std::array<Instance, 2> family{
        Instance{{{1, 0, 3, q(6, 5)}, {2, 1, 2, q(8, 5)}}, {}},
        Instance{{{1, 0, 3, q(6, 5)}, {3, 2, 3, q(8, 5)}}, {}},
    };
    RatioReport report;
    for (std::size_t i = 0; i < family.size(); ++i) {
        RatioRecord rec{i, solve_optimal(family[i]).best_throughput, true, {}};
        for (const auto& p : policies) rec.throughput[p.name] = throughput(run_online(family[i], p.policy).trace);
        report.records.push_back(rec);
    }
    summarize(report, {"coolest", "edf"});
    // Branch-1 instance: both policies take job 1 at time 0 and lose job 2.
    CHECK(report.records[0].opt == 2);
    CHECK(report.records[0].throughput.at("coolest") == 1);
    CHECK(report.records[0].throughput.at("edf") == 1);
    CHECK(report.summaries.at("coolest").max_ratio == q(2));
    CHECK(report.summaries.at("edf").max_ratio == q(2));
}
