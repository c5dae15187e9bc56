// Command-line front end for the thermo library.
//
// Exit codes: 0 success, 1 domain outcome (invalid instance, violation, counterexample),
// 2 usage or parse error, 3 opt result capped by --budget (a lower bound, not an optimum).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "thermo/adversary.hpp"
#include "thermo/errors.hpp"
#include "thermo/io.hpp"
#include "thermo/online.hpp"
#include "thermo/reductions.hpp"
#include "thermo/render.hpp"
#include "thermo/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;
constexpr int kBudgetCapped = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw thermo::ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

thermo::Policy require_policy(const std::string& name) {
    auto p = thermo::policy_by_name(name);
    if (!p) throw CLI::ValidationError("--policy", "unknown policy '" + name + "' (coolest, edf, idle)");
    return *p;
}

int cmd_validate(const std::string& path) {
    const auto inst = thermo::parse_instance(read_input(path));
    const auto errors = thermo::validate_instance(inst);
    for (const auto& e : errors) {
        std::cout << (e.job ? "job " + std::to_string(*e.job) + " " : "") << e.field << ": " << e.message << "\n";
    }
    if (errors.empty()) std::cout << "ok: " << inst.jobs.size() << " jobs, horizon " << inst.horizon() << "\n";
    return errors.empty() ? kOk : kDomain;
}

int cmd_simulate(const std::string& inst_path, const std::string& sched_path, const std::string& out) {
    const auto inst = thermo::parse_instance(read_input(inst_path));
    thermo::require_valid(inst);
    const auto trace = thermo::simulate(inst, thermo::parse_schedule(read_input(sched_path)));
    write_output(out, thermo::serialize_trace(trace));
    return trace.ok() ? kOk : kDomain;
}

int cmd_opt(const std::string& path, std::uint64_t budget, const std::string& out) {
    const auto inst = thermo::parse_instance(read_input(path));
    thermo::SolverOptions opts;
    if (budget > 0) opts.node_budget = budget;
    const auto res = thermo::solve_optimal(inst, opts);
    std::cout << "best_throughput " << res.best_throughput << (res.proven_optimal ? " (optimal)" : " (lower bound)")
              << "\nexplored " << res.explored << "\nmemo_hits " << res.memo_hits << "\n";
    if (out.empty()) {
        std::cout << "witness " << thermo::serialize_schedule(res.witness);
    } else {
        write_output(out, thermo::serialize_schedule(res.witness));
    }
    return res.proven_optimal ? kOk : kBudgetCapped;
}

int cmd_online(const std::string& path, const std::string& policy, const std::string& out) {
    const auto inst = thermo::parse_instance(read_input(path));
    const auto run = thermo::run_online(inst, require_policy(policy));
    write_output(out, thermo::serialize_online_run(run));
    return kOk;
}

int cmd_reduce(const std::string& kind, const std::string& path, std::string out, std::string meta_path,
               const std::string& schedule_path) {
    const std::string text = read_input(path);
    std::pair<thermo::Instance, thermo::ReductionMeta> generated;
    std::optional<thermo::Schedule> canonical;
    if (kind == "3part") {
        const auto src = thermo::parse_three_partition_source(text);
        generated = thermo::gen_from_3partition(src);
        if (!schedule_path.empty()) {
            if (auto cert = thermo::brute_3partition(src)) {
                canonical = thermo::canonical_schedule_3partition(src, generated.second, *cert);
            }
        }
    } else if (kind == "n3dm") {
        const auto src = thermo::parse_n3dm_source(text);
        generated = thermo::gen_from_n3dm(src);
        if (!schedule_path.empty()) {
            if (auto cert = thermo::brute_n3dm(src)) {
                canonical = thermo::canonical_schedule_n3dm(src, generated.second, *cert);
            }
        }
    } else {
        throw CLI::ValidationError("reduce", "kind must be 3part or n3dm");
    }

    if (meta_path.empty()) meta_path = (out.empty() || out == "-" ? path : out) + ".meta.json";
    write_output(out, thermo::serialize_instance(generated.first));
    write_output(meta_path, thermo::serialize_meta(generated.second));
    if (!schedule_path.empty()) {
        if (!canonical) {
            std::cerr << "source has no solution; no canonical schedule written\n";
            return kDomain;
        }
        write_output(schedule_path, thermo::serialize_schedule(*canonical));
    }
    return kOk;
}

int cmd_adversary(const std::string& policy, const std::string& out) {
    const auto t = thermo::run_lower_bound_game(require_policy(policy));
    write_output(out, thermo::serialize_transcript(t));
    std::cerr << "branch " << t.branch << ": algorithm " << t.alg_throughput << ", adversary " << t.adv_throughput
              << "\n";
    return kOk;
}

int cmd_experiment(const thermo::RandomModel& model, std::size_t count, const std::vector<std::string>& policies,
                   std::uint64_t budget, const std::string& out) {
    std::vector<thermo::NamedPolicy> named;
    for (const auto& p : policies) named.push_back({p, require_policy(p)});
    thermo::SolverOptions opts;
    if (budget > 0) opts.node_budget = budget;
    const auto report = thermo::ratio_experiment(model, named, count, opts);
    if (!out.empty()) write_output(out, thermo::serialize_report(report));
    std::cout << thermo::report_summary_table(report);
    return report.has_counterexample() ? kDomain : kOk;
}

int cmd_render(const std::string& inst_path, const std::vector<std::string>& schedules, const std::string& format,
               const std::string& out) {
    const auto inst = thermo::parse_instance(read_input(inst_path));
    std::vector<thermo::Schedule> parsed;
    for (const auto& s : schedules) parsed.push_back(thermo::parse_schedule(read_input(s)));
    const auto fmt = format == "svg" ? thermo::GanttFormat::Svg : thermo::GanttFormat::Text;
    write_output(out, thermo::render_gantt(inst, parsed, fmt));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temperature-aware unit-job scheduling: simulate, optimize, run online policies"};
    app.require_subcommand(1);

    std::string instance_path, schedule_path, out, policy = "coolest";

    auto* validate = app.add_subcommand("validate", "Check an instance file for structural errors");
    validate->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();

    auto* simulate = app.add_subcommand("simulate", "Simulate a schedule and print the trace");
    simulate->add_option("instance", instance_path)->required();
    simulate->add_option("schedule", schedule_path)->required();
    simulate->add_option("-o,--out", out, "Trace output file");

    std::uint64_t budget = 0;
    auto* opt = app.add_subcommand("opt", "Compute the maximum throughput and a witness schedule");
    opt->add_option("instance", instance_path)->required();
    opt->add_option("--budget", budget, "Node cap (0 = unlimited)");
    opt->add_option("-o,--out", out, "Witness schedule output file");

    auto* online = app.add_subcommand("online", "Run a built-in online policy");
    online->add_option("instance", instance_path)->required();
    online->add_option("--policy", policy)->check(CLI::IsMember({"coolest", "edf", "idle"}));
    online->add_option("-o,--out", out);

    std::string kind, meta_path, canonical_path;
    auto* reduce = app.add_subcommand("reduce", "Build a scheduling instance from a 3-Partition or N3DM source");
    reduce->add_option("kind", kind, "3part or n3dm")->required()->check(CLI::IsMember({"3part", "n3dm"}));
    reduce->add_option("source", instance_path, "Source instance file")->required();
    reduce->add_option("-o,--out", out, "Instance output file (default stdout)");
    reduce->add_option("--meta", meta_path, "Meta sidecar file (default <out or source>.meta.json)");
    reduce->add_option("--schedule", canonical_path,
                       "Also solve the source by brute force and write the canonical schedule");

    auto* adversary = app.add_subcommand("adversary", "Play the lower-bound adversary against a policy");
    adversary->add_option("--policy", policy)->check(CLI::IsMember({"coolest", "edf", "idle"}));
    adversary->add_option("-o,--out", out);

    thermo::RandomModel model;
    std::size_t count = 100;
    std::vector<std::string> policies{"coolest", "edf"};
    auto* experiment = app.add_subcommand("experiment", "Compare online policies against the exact optimum");
    experiment->add_option("--n", model.jobs, "Jobs per instance")->capture_default_str();
    experiment->add_option("--count", count, "Number of instances")->capture_default_str();
    experiment->add_option("--seed", model.seed, "Base seed; instance i uses seed + i")->capture_default_str();
    experiment->add_option("--release-span", model.release_span)->capture_default_str();
    experiment->add_option("--max-window", model.max_window)->capture_default_str();
    experiment->add_option("--policy", policies)->check(CLI::IsMember({"coolest", "edf", "idle"}));
    experiment->add_option("--budget", budget, "Solver node cap per instance (0 = unlimited)");
    experiment->add_option("-o,--out", out, "RatioReport output file");

    std::vector<std::string> schedules;
    std::string format = "text";
    auto* render = app.add_subcommand("render", "Draw schedules as a text or SVG Gantt chart");
    render->add_option("instance", instance_path)->required();
    render->add_option("schedules", schedules, "One or more schedule files")->required();
    render->add_option("--format", format)->check(CLI::IsMember({"text", "svg"}));
    render->add_option("-o,--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(instance_path);
        if (*simulate) return cmd_simulate(instance_path, schedule_path, out);
        if (*opt) return cmd_opt(instance_path, budget, out);
        if (*online) return cmd_online(instance_path, policy, out);
        if (*reduce) return cmd_reduce(kind, instance_path, out, meta_path, canonical_path);
        if (*adversary) return cmd_adversary(policy, out);
        if (*experiment) return cmd_experiment(model, count, policies, budget, out);
        if (*render) return cmd_render(instance_path, schedules, format, out);
    } catch (const thermo::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const thermo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kUsage;
}
