#include "doctest.h"

#include "support.hpp"
#include "thermo/errors.hpp"
#include "thermo/io.hpp"
#include "thermo/render.hpp"

using namespace thermo;
using thermo::testing::q;

TEST_CASE("[io] instance format") {
    const Instance example = thermo::testing::four_job_example();
    const std::string text = serialize_instance(example);
    CHECK(parse_instance(text) == example);
    CHECK(serialize_instance(parse_instance(text)) == text);
    CHECK(text.find("\"heat\": \"19/10\"") != std::string::npos);

    const std::string decimal = R"({"jobs":[{"id":2,"release":0,"deadline":4,"heat":"0.6"},
        {"id":1,"release":0,"deadline":2,"heat":"0.4"}],"threshold":"1","cooling_factor":"2.0"})";
    const Instance parsed = parse_instance(decimal);
    CHECK(parsed.jobs[0].id == 1);
    CHECK(parsed.jobs[0].heat == q(2, 5));
    CHECK(parsed.config.cooling_factor == q(2));

    CHECK(serialize_instance(Instance{}) == "{\n  \"cooling_factor\": \"2\",\n  \"jobs\": [],\n  \"threshold\": \"1\"\n}\n");
}

TEST_CASE("[io] instance parse errors") {
    auto where = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.where();
        }
        return std::string("no error");
    };
    CHECK(where(R"({"jobs":[{"id":1,"release":0,"deadline":1,"heat":"1/0"}]})") == "jobs[0].heat");
    CHECK(where(R"({"jobs":[{"id":1,"release":0,"deadline":1,"heat":0.5}]})") == "jobs[0].heat");
    CHECK(where(R"({"jobs":[{"id":1,"release":0,"deadline":1,"heat":"1","color":3}]})") == "jobs[0].color");
    CHECK(where(R"({"jobs":[], "extra": 1})") == "instance.extra");
    CHECK(where(R"({"jobs":[{"id":-1,"release":0,"deadline":1,"heat":"1"}]})") == "jobs[0].id");
    CHECK(where(R"({"threshold":"1"})") == "instance.jobs");
    CHECK(where("{\n\"jobs\": [\n,]}") == "line 3");
}

TEST_CASE("[io] schedule, trace and meta") {
    const Schedule s = thermo::testing::four_job_full_schedule();
    CHECK(serialize_schedule(s) == "[1,null,3,2,4,null]\n");
    CHECK(parse_schedule("[1, null, 3, 2, 4, null]") == s);
    CHECK_THROWS_AS(parse_schedule("[1, \"x\"]"), ParseError);

    const Instance example = thermo::testing::four_job_example();
    const auto greedy = simulate(example, Schedule{{1, 2, 3, std::nullopt, 4, std::nullopt}});
    const std::string text = serialize_trace(greedy);
    CHECK(parse_trace(text) == greedy);
    CHECK(text.find("\"kind\": \"thermal\"") != std::string::npos);

    const auto [inst, meta] = gen_from_3partition(make_three_partition({3, 3, 3, 3, 3, 3}));
    CHECK(parse_meta(serialize_meta(meta)) == meta);
    CHECK(serialize_instance(inst).find("\"heat\": \"7/4\"") != std::string::npos);
}

TEST_CASE("[io] round trips on random data") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Instance inst = random_instance({seed % 9, 8, 5, seed});
        inst.config = ThermalConfig{q(1 + seed % 3, 1 + seed % 2), q(3 + seed % 5, 1 + seed % 2)};
        CHECK(parse_instance(serialize_instance(inst)) == inst);

        const Schedule s = thermo::testing::random_any_schedule(inst, rng);
        CHECK(parse_schedule(serialize_schedule(s)) == s);
        const auto trace = simulate(inst, s);
        CHECK(parse_trace(serialize_trace(trace)) == trace);
    }
    const std::vector<NamedPolicy> policies{{"coolest", coolest_first_decide}, {"edf", edf_decide}};
    const auto report = ratio_experiment({5, 5, 3, 11}, policies, 40);
    CHECK(parse_report(serialize_report(report)) == report);
}

TEST_CASE("[io] reduction source files") {
    const auto tp = parse_three_partition_source("# n, then 3n values\n2\n3 3 3\n3 3 3  # tail\n");
    CHECK(tp.beta == 9);
    CHECK(tp.values.size() == 6);
    CHECK_THROWS_AS(parse_three_partition_source("2 3 3 3"), ParseError);
    CHECK_THROWS_AS(parse_three_partition_source("1 3 x 3"), ParseError);
    CHECK_THROWS_AS(parse_three_partition_source("1 1 1 9"), InvalidSource);

    const auto m = parse_n3dm_source("2 8\n0 8\n8 0\n0 0\n");
    CHECK(m.beta == 8);
    CHECK(m.a == std::vector<std::int64_t>{0, 8});
    CHECK(m.c == std::vector<std::int64_t>{0, 0});
    CHECK_THROWS_AS(parse_n3dm_source("1 1 0 0 0"), InvalidSource);
}

TEST_CASE("[render] text gantt") {
    const Instance example = thermo::testing::four_job_example();
    const std::string text = render_gantt(example, thermo::testing::four_job_full_schedule(), GanttFormat::Text);
    const std::string expected =
        "threshold 1, cooling factor 2, slots 6\n"
        "time       0             1             2             3             4             5             6\n"
        "row 1      |      1      |      \xC2\xB7      |      3      |      2      |      4      |      \xC2\xB7      |\n"
        "tau        0            1/5          1/10           1*            4/5           4/5           2/5\n"
        "~          0          0.2000        0.1000         1.000        0.8000        0.8000        0.4000\n";
    CHECK(text == expected);

    const std::string idle = render_gantt(example, Schedule{}, GanttFormat::Text);
    CHECK(idle.find("1") == idle.find("1, cooling"));  // no job labels, no non-zero temperature
    CHECK(idle.find("0.") == std::string::npos);

    const std::string bad = render_gantt(example, Schedule{{1, 2, 3}}, GanttFormat::Text);
    CHECK(bad.find("!3") != std::string::npos);
}

TEST_CASE("[render] svg gantt") {
    const Instance example = thermo::testing::four_job_example();
    const std::array<Schedule, 2> both{Schedule{{1, 2, std::nullopt, std::nullopt, 4, std::nullopt}},
                                       thermo::testing::four_job_full_schedule()};
    const std::string svg = render_gantt(example, both, GanttFormat::Svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("id=\"row2\"") != std::string::npos);
    CHECK(svg.find(">1/10</text>") != std::string::npos);
    CHECK(svg == render_gantt(example, both, GanttFormat::Svg));

    const N3dmInstance src{{0, 8}, {8, 0}, {0, 0}, 8};
    const auto [inst, meta] = gen_from_n3dm(src);
    const Schedule s = canonical_schedule_n3dm(src, meta, MatchingCertificate{{{1, 1, 0}, {0, 0, 1}}});
    const std::string fig = render_gantt(inst, s, GanttFormat::Text);
    // Gadget ids 7, 8, 9 at slots 0, 4, 8; blocks of A (1-2), B (3-4), C (5-6) between them.
    CHECK(fig.find("|      7      |      2      |      4      |      5      |      8      |") !=
          std::string::npos);
}
