#include "doctest.h"

#include "support.hpp"
#include "thermo/errors.hpp"

using namespace thermo;
using thermo::testing::q;

TEST_CASE("[rational] parsing and canonical text") {
    CHECK(Rational::parse("0.4") == Rational::parse("2/5"));
    CHECK(Rational::parse("1.9") == q(19, 10));
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-0.375") == q(-3, 8));
    CHECK(Rational::parse("2").str() == "2");
    CHECK(Rational::parse(".5") == q(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
    CHECK(Rational::pow2(-2) == q(1, 4));
    CHECK(Rational::pow2(3) == q(8));
    CHECK(Rational::pow2(-70).denominator() == (BigInt(1) << 70));
    CHECK(q(1, 5).decimal(4) == "0.2000");
    CHECK(q(1).decimal(4) == "1.000");
}

TEST_CASE("[model] validate_instance") {
    CHECK(validate_instance(thermo::testing::four_job_example()).empty());

    Instance empty_window{{{7, 3, 3, q(1)}}, {}};
    auto errs = validate_instance(empty_window);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].job == 7u);
    CHECK(errs[0].field == "deadline");

    Instance dup{{{1, 0, 2, q(1)}, {1, 0, 3, q(1)}}, {}};
    errs = validate_instance(dup);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].field == "id");
    CHECK(errs[0].job == 1u);

    Instance bad{{{2, 0, 1, q(-1, 2)}}, {q(0), q(1)}};
    CHECK(validate_instance(bad).size() == 3);  // threshold, cooling factor, heat

    // Heat above 2 is legal input; such a job is never admissible.
    Instance hot{{{1, 0, 1, q(5, 2)}}, {}};
    CHECK(validate_instance(hot).empty());
}

TEST_CASE("[model] step_temperature") {
    const ThermalConfig cfg;
    CHECK(step_temperature(q(0), q(0), cfg) == q(0));
    CHECK(step_temperature(q(1), q(1), cfg) == q(1));
    CHECK(step_temperature(q(1, 10), q(19, 10), cfg) == q(1));
    CHECK(step_temperature(q(1), q(1), ThermalConfig{q(1), q(3)}) == q(2, 3));
}

TEST_CASE("[model] is_admissible") {
    const ThermalConfig cfg;
    CHECK_FALSE(is_admissible(q(3, 5), Job{2, 1, 2, q(8, 5)}, cfg));
    CHECK(is_admissible(q(1), Job{1, 0, 1, q(1)}, cfg));
    CHECK(is_admissible(q(0), Job{1, 0, 1, q(2)}, cfg));
    CHECK_FALSE(is_admissible(q(0), Job{1, 0, 1, q(5, 2)}, cfg));
}

TEST_CASE("[model] simulate the four-job example") {
    const Instance inst = thermo::testing::four_job_example();

    SUBCASE("full schedule") {
        const auto trace = simulate(inst, thermo::testing::four_job_full_schedule());
        CHECK(trace.ok());
        CHECK(trace.throughput == 4);
        CHECK(throughput(trace) == 4);
        CHECK(trace.temperatures == std::vector<Rational>{q(0), q(1, 5), q(1, 10), q(1), q(4, 5), q(4, 5), q(2, 5)});
    }

    SUBCASE("greedy prefix makes job 3 too hot") {
        const Schedule greedy{{1, 2, 3, std::nullopt, 4, std::nullopt}};
        const auto trace = simulate(inst, greedy);
        REQUIRE(trace.violations.size() == 1);
        CHECK(trace.violations[0] == Violation{2, ViolationKind::Thermal, 3});
        CHECK(trace.temperatures[2] == q(2, 5));
        CHECK(q(2, 5) + q(19, 10) > q(2));
        CHECK(trace.throughput == 3);
        CHECK_THROWS_AS(throughput(trace), InvalidTrace);
    }

    SUBCASE("all idle") {
        const auto trace = simulate(inst, Schedule{});
        CHECK(trace.temperatures.size() == 7);  // padded to the horizon
        for (const auto& t : trace.temperatures) CHECK(t == q(0));
        CHECK(throughput(trace) == 0);
    }

    SUBCASE("window, unknown and duplicate violations") {
        const Schedule s{{4, 1, 1, 77, std::nullopt, std::nullopt}};
        const auto trace = simulate(inst, s);
        REQUIRE(trace.violations.size() == 4);
        CHECK(trace.violations[0] == Violation{0, ViolationKind::OutsideWindow, 4});
        CHECK(trace.violations[1] == Violation{2, ViolationKind::DuplicateJob, 1});
        CHECK(trace.violations[2] == Violation{2, ViolationKind::OutsideWindow, 1});
        CHECK(trace.violations[3] == Violation{3, ViolationKind::UnknownJob, 77});
        CHECK(trace.completed == std::vector<JobId>{1});
        // Heat of the illegally placed job 4 is still applied.
        CHECK(trace.temperatures[1] == q(2, 5));
    }

    SUBCASE("last legal start is deadline - 1") {
        const Instance one{{{1, 2, 3, q(1)}}, {}};
        CHECK(simulate(one, Schedule{{std::nullopt, std::nullopt, 1}}).ok());
        CHECK_FALSE(simulate(one, Schedule{{std::nullopt, 1, std::nullopt}}).ok());
    }
}

TEST_CASE("[model] properties over random instances") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Instance inst = random_instance({6, 6, 4, seed});
        const Time len = inst.horizon();

        // Closed form agrees with the step loop, even in diagnostic mode.
        const Schedule any = thermo::testing::random_any_schedule(inst, rng);
        const auto any_trace = simulate(inst, any);
        CHECK(any_trace.temperatures == thermo::testing::closed_form_temperatures(inst, any, len));

        const Schedule s = thermo::testing::random_feasible_schedule(inst, rng);
        const auto trace = simulate(inst, s);
        REQUIRE(trace.ok());
        for (const auto& t : trace.temperatures) {
            CHECK(t >= q(0));
            CHECK(t <= inst.config.threshold);
        }

        // Idle monotonicity.
        for (Time u = 0; u < s.length(); ++u) {
            if (!s.slots[u]) continue;
            Schedule idled = s;
            idled.slots[u] = std::nullopt;
            const auto cooler = simulate(inst, idled);
            CHECK(cooler.ok());
            for (std::size_t k = 0; k < trace.temperatures.size(); ++k) {
                CHECK(cooler.temperatures[k] <= trace.temperatures[k]);
            }
        }

        CHECK(simulate(inst, s) == trace);
    }
}
