#include "thermo/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

#include "thermo/errors.hpp"

namespace thermo {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
        throw ParseError("line " + std::to_string(line), e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void expect_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed,
                 std::initializer_list<std::string_view> required) {
    if (!obj.is_object()) throw ParseError(where, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParseError(where + "." + key, "unknown field");
        }
    }
    for (auto key : required) {
        if (!obj.contains(key)) throw ParseError(where + "." + std::string(key), "missing field");
    }
}

Rational rational_field(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where, "expected a rational string such as \"2/5\" or \"0.4\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where, e.what());
    }
}

template <typename Int>
Int int_field(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
    if constexpr (std::is_unsigned_v<Int>) {
        if (v.is_number_unsigned()) {
            const auto x = v.get<std::uint64_t>();
            if (x > std::numeric_limits<Int>::max()) throw ParseError(where, "integer out of range");
            return static_cast<Int>(x);
        }
        if (v.get<std::int64_t>() < 0) throw ParseError(where, "expected a non-negative integer");
    }
    return v.get<Int>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_array()) throw ParseError(where, "expected an array");
    return v;
}

bool bool_field(const json& v, const std::string& where) {
    if (!v.is_boolean()) throw ParseError(where, "expected true or false");
    return v.get<bool>();
}

json slots_to_json(const Schedule& s) {
    json arr = json::array();
    for (const auto& slot : s.slots) arr.push_back(slot ? json(*slot) : json(nullptr));
    return arr;
}

Schedule slots_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where, "expected an array of job ids or null");
    Schedule s;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i].is_null()) {
            s.slots.emplace_back(std::nullopt);
        } else {
            s.slots.emplace_back(int_field<JobId>(arr[i], where + "[" + std::to_string(i) + "]"));
        }
    }
    return s;
}

json trace_to_json(const SimulationTrace& t) {
    json temps = json::array();
    for (const auto& r : t.temperatures) temps.push_back(r.str());
    json violations = json::array();
    for (const auto& v : t.violations) {
        violations.push_back({{"time", v.time}, {"kind", std::string(to_string(v.kind))}, {"job", v.job}});
    }
    return {{"temperatures", temps},
            {"completed", t.completed},
            {"throughput", t.throughput},
            {"violations", violations}};
}

json job_to_json(const Job& j) {
    return {{"id", j.id}, {"release", j.release}, {"deadline", j.deadline}, {"heat", j.heat.str()}};
}

json model_to_json(const RandomModel& m) {
    return {{"jobs", m.jobs}, {"release_span", m.release_span}, {"max_window", m.max_window}, {"seed", m.seed}};
}

std::vector<std::int64_t> read_integers(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') { ++line; ++i; continue; }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
        const std::string token(text.substr(i, j - i));
        try {
            std::size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line), "expected an integer, got '" + token + "'");
        }
        i = j;
    }
    return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const json doc = parse_json(text);
    expect_keys(doc, "instance", {"threshold", "cooling_factor", "jobs"}, {"jobs"});

    Instance inst;
    if (doc.contains("threshold")) inst.config.threshold = rational_field(doc["threshold"], "threshold");
    if (doc.contains("cooling_factor")) {
        inst.config.cooling_factor = rational_field(doc["cooling_factor"], "cooling_factor");
    }
    const json& jobs = doc["jobs"];
    if (!jobs.is_array()) throw ParseError("jobs", "expected an array");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const std::string where = "jobs[" + std::to_string(i) + "]";
        const json& j = jobs[i];
        expect_keys(j, where, {"id", "release", "deadline", "heat"}, {"id", "release", "deadline", "heat"});
        inst.jobs.push_back({int_field<JobId>(j["id"], where + ".id"),
                             int_field<Time>(j["release"], where + ".release"),
                             int_field<Time>(j["deadline"], where + ".deadline"),
                             rational_field(j["heat"], where + ".heat")});
    }
    std::stable_sort(inst.jobs.begin(), inst.jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    return inst;
}

std::string serialize_instance(const Instance& instance) {
    std::vector<Job> jobs = instance.jobs;
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    json arr = json::array();
    for (const auto& j : jobs) arr.push_back(job_to_json(j));
    return dump({{"threshold", instance.config.threshold.str()},
                 {"cooling_factor", instance.config.cooling_factor.str()},
                 {"jobs", arr}});
}

Schedule parse_schedule(std::string_view text) { return slots_from_json(parse_json(text), "schedule"); }

std::string serialize_schedule(const Schedule& schedule) { return slots_to_json(schedule).dump() + "\n"; }

SimulationTrace parse_trace(std::string_view text) {
    const json doc = parse_json(text);
    expect_keys(doc, "trace", {"temperatures", "completed", "throughput", "violations"},
                {"temperatures", "completed", "throughput", "violations"});
    SimulationTrace t;
    const json& temperatures = array_field(doc, "temperatures", "temperatures");
    for (std::size_t i = 0; i < temperatures.size(); ++i) {
        t.temperatures.push_back(rational_field(temperatures[i],
                                                 "temperatures[" + std::to_string(i) + "]"));
    }
    const json& completed = array_field(doc, "completed", "completed");
    for (std::size_t i = 0; i < completed.size(); ++i) {
        t.completed.push_back(int_field<JobId>(completed[i], "completed[" + std::to_string(i) + "]"));
    }
    t.throughput = int_field<int>(doc["throughput"], "throughput");
    const json& violations = array_field(doc, "violations", "violations");
    for (std::size_t i = 0; i < violations.size(); ++i) {
        const std::string where = "violations[" + std::to_string(i) + "]";
        const json& v = violations[i];
        expect_keys(v, where, {"time", "kind", "job"}, {"time", "kind", "job"});
        const auto kind = v["kind"].is_string() ? violation_kind_from_string(v["kind"].get<std::string>())
                                                : std::nullopt;
        if (!kind) throw ParseError(where + ".kind", "unknown violation kind");
        t.violations.push_back({int_field<Time>(v["time"], where + ".time"), *kind,
                                int_field<JobId>(v["job"], where + ".job")});
    }
    return t;
}

std::string serialize_trace(const SimulationTrace& trace) { return dump(trace_to_json(trace)); }

std::string serialize_online_run(const OnlineRun& run) {
    json decisions = json::array();
    for (const auto& d : run.decisions) {
        json pending = json::array();
        for (const auto& j : d.pending) pending.push_back(j.id);
        decisions.push_back({{"time", d.time},
                             {"temperature", d.temperature.str()},
                             {"pending", pending},
                             {"decision", d.decision.job ? json(*d.decision.job) : json(nullptr)}});
    }
    return dump({{"schedule", slots_to_json(run.schedule)},
                 {"trace", trace_to_json(run.trace)},
                 {"decisions", decisions}});
}

std::string serialize_transcript(const AdversaryTranscript& t) {
    json jobs = json::array();
    for (const auto& j : t.revealed.jobs) jobs.push_back(job_to_json(j));
    return dump({{"branch", t.branch},
                 {"revealed", jobs},
                 {"algorithm_schedule", slots_to_json(t.algorithm.schedule)},
                 {"algorithm_trace", trace_to_json(t.algorithm.trace)},
                 {"adversary_schedule", slots_to_json(t.adversary)},
                 {"adversary_trace", trace_to_json(t.adversary_trace)},
                 {"alg_throughput", t.alg_throughput},
                 {"adv_throughput", t.adv_throughput}});
}

RatioReport parse_report(std::string_view text) {
    const json doc = parse_json(text);
    expect_keys(doc, "report", {"model", "records", "summaries", "opt_zero_skips", "budget_capped"},
                {"model", "records", "summaries", "opt_zero_skips", "budget_capped"});
    RatioReport r;
    const json& m = doc["model"];
    expect_keys(m, "model", {"jobs", "release_span", "max_window", "seed"}, {"jobs", "release_span", "max_window", "seed"});
    r.model = {int_field<std::size_t>(m["jobs"], "model.jobs"), int_field<Time>(m["release_span"], "model.release_span"),
               int_field<Time>(m["max_window"], "model.max_window"), int_field<std::uint64_t>(m["seed"], "model.seed")};

    const json& records = array_field(doc, "records", "records");
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string where = "records[" + std::to_string(i) + "]";
        const json& rec = records[i];
        expect_keys(rec, where, {"seed", "opt", "proven_optimal", "throughput"}, {"seed", "opt", "proven_optimal", "throughput"});
        RatioRecord out{int_field<std::uint64_t>(rec["seed"], where + ".seed"), int_field<int>(rec["opt"], where + ".opt"),
                        bool_field(rec["proven_optimal"], where + ".proven_optimal"), {}};
        if (!rec["throughput"].is_object()) throw ParseError(where + ".throughput", "expected an object");
        for (const auto& [name, v] : rec["throughput"].items()) {
            out.throughput[name] = int_field<int>(v, where + ".throughput." + name);
        }
        r.records.push_back(std::move(out));
    }
    if (!doc["summaries"].is_object()) throw ParseError("summaries", "expected an object");
    for (const auto& [name, s] : doc["summaries"].items()) {
        const std::string where = "summaries." + name;
        expect_keys(s, where, {"max_ratio", "mean_ratio", "counted", "counterexamples"},
                    {"max_ratio", "mean_ratio", "counted", "counterexamples"});
        PolicySummary out{rational_field(s["max_ratio"], where + ".max_ratio"),
                          rational_field(s["mean_ratio"], where + ".mean_ratio"),
                          int_field<std::size_t>(s["counted"], where + ".counted"), {}};
        for (const auto& seed : array_field(s, "counterexamples", where + ".counterexamples")) {
            out.counterexamples.push_back(int_field<std::uint64_t>(seed, where + ".counterexamples"));
        }
        r.summaries[name] = std::move(out);
    }
    r.opt_zero_skips = int_field<std::size_t>(doc["opt_zero_skips"], "opt_zero_skips");
    r.budget_capped = int_field<std::size_t>(doc["budget_capped"], "budget_capped");
    return r;
}

std::string serialize_report(const RatioReport& report) {
    json records = json::array();
    for (const auto& rec : report.records) {
        records.push_back({{"seed", rec.seed},
                           {"opt", rec.opt},
                           {"proven_optimal", rec.proven_optimal},
                           {"throughput", rec.throughput}});
    }
    json summaries = json::object();
    for (const auto& [name, s] : report.summaries) {
        summaries[name] = {{"max_ratio", s.max_ratio.str()},
                           {"mean_ratio", s.mean_ratio.str()},
                           {"counted", s.counted},
                           {"counterexamples", s.counterexamples}};
    }
    return dump({{"model", model_to_json(report.model)},
                 {"records", records},
                 {"summaries", summaries},
                 {"opt_zero_skips", report.opt_zero_skips},
                 {"budget_capped", report.budget_capped}});
}

std::string report_summary_table(const RatioReport& report) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %9s %10s %10s %16s\n", "policy", "counted", "max", "mean",
                  "counterexamples");
    os << line;
    for (const auto& [name, s] : report.summaries) {
        std::snprintf(line, sizeof line, "%-10s %9zu %10s %10s %16zu\n", name.c_str(), s.counted,
                      s.max_ratio.decimal(4).c_str(), s.mean_ratio.decimal(4).c_str(), s.counterexamples.size());
        os << line;
    }
    os << "instances: " << report.records.size() << ", OPT = 0 skipped: " << report.opt_zero_skips
       << ", budget-capped: " << report.budget_capped << "\n";
    return os.str();
}

ReductionMeta parse_meta(std::string_view text) {
    const json doc = parse_json(text);
    expect_keys(doc, "meta", {"kind", "n", "beta", "origins", "boundaries"}, {"kind", "n", "beta", "origins", "boundaries"});
    ReductionMeta m;
    const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
    if (kind == "3partition") {
        m.kind = ReductionKind::ThreePartition;
    } else if (kind == "n3dm") {
        m.kind = ReductionKind::N3dm;
    } else {
        throw ParseError("meta.kind", "expected \"3partition\" or \"n3dm\"");
    }
    m.n = int_field<std::size_t>(doc["n"], "meta.n");
    m.beta = int_field<std::int64_t>(doc["beta"], "meta.beta");
    const json& origins = array_field(doc, "origins", "origins");
    for (std::size_t i = 0; i < origins.size(); ++i) {
        const std::string where = "origins[" + std::to_string(i) + "]";
        const json& o = origins[i];
        expect_keys(o, where, {"job", "class", "source_index", "value"}, {"job", "class", "source_index", "value"});
        const auto cls = o["class"].is_string() ? job_class_from_string(o["class"].get<std::string>()) : std::nullopt;
        if (!cls) throw ParseError(where + ".class", "unknown job class");
        m.origins.push_back({int_field<JobId>(o["job"], where + ".job"), *cls,
                             int_field<std::size_t>(o["source_index"], where + ".source_index"),
                             int_field<std::int64_t>(o["value"], where + ".value")});
    }
    std::sort(m.origins.begin(), m.origins.end(), [](const JobOrigin& a, const JobOrigin& b) { return a.job < b.job; });
    const json& boundaries = array_field(doc, "boundaries", "boundaries");
    for (std::size_t i = 0; i < boundaries.size(); ++i) {
        m.boundaries.push_back(int_field<Time>(boundaries[i], "boundaries[" + std::to_string(i) + "]"));
    }
    return m;
}

std::string serialize_meta(const ReductionMeta& meta) {
    json origins = json::array();
    for (const auto& o : meta.origins) {
        origins.push_back({{"job", o.job},
                           {"class", std::string(to_string(o.cls))},
                           {"source_index", o.source_index},
                           {"value", o.value}});
    }
    return dump({{"kind", meta.kind == ReductionKind::ThreePartition ? "3partition" : "n3dm"},
                 {"n", meta.n},
                 {"beta", meta.beta},
                 {"origins", origins},
                 {"boundaries", meta.boundaries}});
}

ThreePartitionInstance parse_three_partition_source(std::string_view text) {
    const auto ints = read_integers(text);
    if (ints.empty() || ints[0] <= 0) throw ParseError("header", "expected n > 0");
    const auto n = static_cast<std::size_t>(ints[0]);
    if (ints.size() != 1 + 3 * n) {
        throw ParseError("values", "expected " + std::to_string(3 * n) + " values, got " +
                                       std::to_string(ints.size() - 1));
    }
    return make_three_partition({ints.begin() + 1, ints.end()});
}

N3dmInstance parse_n3dm_source(std::string_view text) {
    const auto ints = read_integers(text);
    if (ints.size() < 2 || ints[0] <= 0) throw ParseError("header", "expected 'n beta' with n > 0");
    const auto n = static_cast<std::size_t>(ints[0]);
    if (ints.size() != 2 + 3 * n) {
        throw ParseError("values", "expected " + std::to_string(3 * n) + " values, got " +
                                       std::to_string(ints.size() - 2));
    }
    N3dmInstance src;
    src.beta = ints[1];
    const auto base = ints.begin() + 2;
    src.a.assign(base, base + static_cast<long>(n));
    src.b.assign(base + static_cast<long>(n), base + static_cast<long>(2 * n));
    src.c.assign(base + static_cast<long>(2 * n), ints.end());
    require_valid(src);
    return src;
}

}  // namespace thermo
