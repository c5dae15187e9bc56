#include "thermo/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "thermo/errors.hpp"

namespace thermo {

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
    std::string out;
    for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "{" + out + "}";
}

void require_full_throughput(const Instance& instance, const Schedule& schedule) {
    const SimulationTrace trace = simulate(instance, schedule);
    const auto expected = static_cast<int>(instance.jobs.size());
    if (!trace.ok() || trace.throughput != expected) {
        throw NotFullThroughput("schedule completes " + std::to_string(trace.throughput) + " of " +
                                std::to_string(expected) + " jobs with " +
                                std::to_string(trace.violations.size()) + " violation(s)");
    }
}

template <typename Source>
std::vector<std::array<std::int64_t, 3>> sorted_triples(
    const std::vector<std::array<std::size_t, 3>>& triples, const Source& value_of, bool sort_inner) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (const auto& t : triples) {
        std::array<std::int64_t, 3> v{value_of(0, t[0]), value_of(1, t[1]), value_of(2, t[2])};
        if (sort_inner) std::sort(v.begin(), v.end());
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ThreePartitionInstance make_three_partition(std::vector<std::int64_t> values) {
    if (values.empty() || values.size() % 3 != 0) {
        throw InvalidSource("3-Partition needs 3n values, got " + std::to_string(values.size()));
    }
    const auto n = static_cast<std::int64_t>(values.size() / 3);
    const std::int64_t sum = std::accumulate(values.begin(), values.end(), std::int64_t{0});
    if (sum % n != 0) {
        throw InvalidSource("sum " + std::to_string(sum) + " of " + join(values) +
                            " is not divisible by n = " + std::to_string(n));
    }
    ThreePartitionInstance src{std::move(values), sum / n};
    require_valid(src);
    return src;
}

void require_valid(const ThreePartitionInstance& src) {
    if (src.values.empty() || src.values.size() % 3 != 0) {
        throw InvalidSource("3-Partition needs 3n values, got " + std::to_string(src.values.size()));
    }
    const auto n = static_cast<std::int64_t>(src.groups());
    const std::int64_t sum = std::accumulate(src.values.begin(), src.values.end(), std::int64_t{0});
    if (sum != n * src.beta) {
        throw InvalidSource("sum " + std::to_string(sum) + " differs from n*beta = " +
                            std::to_string(n * src.beta));
    }
    for (auto a : src.values) {
        // beta/4 < a < beta/2, in integers.
        if (!(4 * a > src.beta && 2 * a < src.beta)) {
            throw InvalidSource("value " + std::to_string(a) + " outside (beta/4, beta/2) for beta = " +
                                std::to_string(src.beta));
        }
        if (a > kMaxPartitionValue) {
            throw InvalidSource("value " + std::to_string(a) + " exceeds cap " +
                                std::to_string(kMaxPartitionValue));
        }
    }
}

void require_valid(const N3dmInstance& src) {
    const std::size_t n = src.a.size();
    if (n == 0 || src.b.size() != n || src.c.size() != n) {
        throw InvalidSource("N3DM needs three non-empty sets of equal size");
    }
    if (src.beta <= 0) throw InvalidSource("beta must be positive");
    std::int64_t sum = 0;
    for (const auto* set : {&src.a, &src.b, &src.c}) {
        for (auto x : *set) {
            if (x < 0 || x > src.beta) {
                throw InvalidSource("element " + std::to_string(x) + " outside [0, beta = " +
                                    std::to_string(src.beta) + "]");
            }
            sum += x;
        }
    }
    if (sum != static_cast<std::int64_t>(n) * src.beta) {
        throw InvalidSource("element sum " + std::to_string(sum) + " differs from n*beta = " +
                            std::to_string(static_cast<std::int64_t>(n) * src.beta));
    }
}

std::string_view to_string(JobClass cls) {
    switch (cls) {
        case JobClass::Element: return "element";
        case JobClass::Gadget: return "gadget";
        case JobClass::A: return "A";
        case JobClass::B: return "B";
        case JobClass::C: return "C";
    }
    return "?";
}

std::optional<JobClass> job_class_from_string(std::string_view text) {
    for (auto c : {JobClass::Element, JobClass::Gadget, JobClass::A, JobClass::B, JobClass::C}) {
        if (to_string(c) == text) return c;
    }
    return std::nullopt;
}

const JobOrigin* ReductionMeta::origin_of(JobId job) const {
    auto it = std::lower_bound(origins.begin(), origins.end(), job,
                               [](const JobOrigin& o, JobId id) { return o.job < id; });
    return it != origins.end() && it->job == job ? &*it : nullptr;
}

std::optional<JobId> ReductionMeta::job_for(JobClass cls, std::size_t source_index) const {
    for (const auto& o : origins) {
        if (o.cls == cls && o.source_index == source_index) return o.job;
    }
    return std::nullopt;
}

void check_certificate(const ThreePartitionInstance& src, const PartitionCertificate& cert) {
    if (cert.triples.size() != src.groups()) {
        throw InvalidCertificate("expected " + std::to_string(src.groups()) + " triples, got " +
                                 std::to_string(cert.triples.size()));
    }
    std::vector<bool> used(src.values.size(), false);
    for (const auto& t : cert.triples) {
        std::int64_t sum = 0;
        for (auto i : t) {
            if (i >= src.values.size() || used[i]) {
                throw InvalidCertificate("index " + std::to_string(i) + " out of range or reused");
            }
            used[i] = true;
            sum += src.values[i];
        }
        if (sum != src.beta) {
            throw InvalidCertificate("triple sums to " + std::to_string(sum) + ", not beta = " +
                                     std::to_string(src.beta));
        }
    }
}

void check_certificate(const N3dmInstance& src, const MatchingCertificate& cert) {
    const std::size_t n = src.size();
    if (cert.triples.size() != n) {
        throw InvalidCertificate("expected " + std::to_string(n) + " triples, got " +
                                 std::to_string(cert.triples.size()));
    }
    std::array<std::vector<bool>, 3> used{std::vector<bool>(n), std::vector<bool>(n),
                                          std::vector<bool>(n)};
    const std::array<const std::vector<std::int64_t>*, 3> sets{&src.a, &src.b, &src.c};
    for (const auto& t : cert.triples) {
        std::int64_t sum = 0;
        for (std::size_t d = 0; d < 3; ++d) {
            if (t[d] >= n || used[d][t[d]]) {
                throw InvalidCertificate("index " + std::to_string(t[d]) + " out of range or reused");
            }
            used[d][t[d]] = true;
            sum += (*sets[d])[t[d]];
        }
        if (sum != src.beta) {
            throw InvalidCertificate("triple sums to " + std::to_string(sum) + ", not beta = " +
                                     std::to_string(src.beta));
        }
    }
}

std::vector<std::array<std::int64_t, 3>> canonical_triples(const ThreePartitionInstance& src,
                                                           const PartitionCertificate& cert) {
    return sorted_triples(
        cert.triples, [&](std::size_t, std::size_t i) { return src.values.at(i); }, true);
}

std::vector<std::array<std::int64_t, 3>> canonical_triples(const N3dmInstance& src,
                                                           const MatchingCertificate& cert) {
    const std::array<const std::vector<std::int64_t>*, 3> sets{&src.a, &src.b, &src.c};
    return sorted_triples(
        cert.triples, [&](std::size_t d, std::size_t i) { return sets[d]->at(i); }, false);
}

std::pair<Instance, ReductionMeta> gen_from_3partition(const ThreePartitionInstance& src) {
    require_valid(src);
    const std::size_t n = src.groups();
    const Time period = src.beta + 1;
    const Time element_deadline = static_cast<Time>(n) * period;

    Instance inst;
    ReductionMeta meta{ReductionKind::ThreePartition, n, src.beta, {}, {}};
    JobId next_id = 1;
    for (std::size_t i = 0; i < src.values.size(); ++i) {
        const auto a = src.values[i];
        Rational heat = Rational(2) - Rational::pow2(static_cast<int>(1 - a));
        inst.jobs.push_back({next_id, 1, element_deadline, std::move(heat)});
        meta.origins.push_back({next_id, JobClass::Element, i, a});
        ++next_id;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Time release = static_cast<Time>(j) * period;
        const Rational heat = j == 0 ? Rational(2) : Rational(1);
        inst.jobs.push_back({next_id, release, release + 1, heat});
        meta.origins.push_back({next_id, JobClass::Gadget, j, 0});
        meta.boundaries.push_back(release);
        ++next_id;
    }
    return {std::move(inst), std::move(meta)};
}

Schedule canonical_schedule_3partition(const ThreePartitionInstance& src, const ReductionMeta& meta,
                                       const PartitionCertificate& cert) {
    require_valid(src);
    check_certificate(src, cert);
    const Time period = src.beta + 1;
    Schedule s = Schedule::idle(static_cast<Time>(src.groups()) * period);

    for (std::size_t j = 0; j < src.groups(); ++j) {
        const Time start = static_cast<Time>(j) * period;
        s.slots[start] = meta.job_for(JobClass::Gadget, j).value();
        Time u = start + 1;
        for (auto i : cert.triples[j]) {
            u += src.values[i] - 1;
            s.slots[u++] = meta.job_for(JobClass::Element, i).value();
        }
    }
    return s;
}

PartitionCertificate extract_3partition(const Instance& instance, const ReductionMeta& meta,
                                        const Schedule& schedule) {
    require_full_throughput(instance, schedule);
    std::vector<std::vector<std::size_t>> groups(meta.n);
    for (Time u = 0; u < schedule.length(); ++u) {
        const auto& slot = schedule.slots[u];
        if (!slot) continue;
        const JobOrigin* origin = meta.origin_of(*slot);
        if (origin == nullptr) throw InvalidCertificate("job " + std::to_string(*slot) + " has no origin");
        if (origin->cls != JobClass::Element) continue;
        const auto after = std::upper_bound(meta.boundaries.begin(), meta.boundaries.end(), u - 1);
        const auto interval = static_cast<std::size_t>(after - meta.boundaries.begin()) - 1;
        groups.at(interval).push_back(origin->source_index);
    }

    PartitionCertificate cert;
    for (const auto& g : groups) {
        if (g.size() != 3) {
            throw InvalidCertificate("interval holds " + std::to_string(g.size()) + " element jobs");
        }
        cert.triples.push_back({g[0], g[1], g[2]});
    }
    return cert;
}

std::pair<Instance, ReductionMeta> gen_from_n3dm(const N3dmInstance& src) {
    require_valid(src);
    const std::size_t n = src.size();
    const Time deadline = 4 * static_cast<Time>(n) + 1;
    const Rational alpha(1, 25);
    const auto f = [&](std::int64_t x) {
        return alpha * (Rational(1) + Rational(x, 8 * src.beta));
    };

    Instance inst;
    ReductionMeta meta{ReductionKind::N3dm, n, src.beta, {}, {}};
    JobId next_id = 1;
    const std::array<std::pair<JobClass, std::int64_t>, 3> classes{
        {{JobClass::A, 8}, {JobClass::B, 4}, {JobClass::C, 2}}};
    const std::array<const std::vector<std::int64_t>*, 3> sets{&src.a, &src.b, &src.c};
    for (std::size_t d = 0; d < 3; ++d) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = (*sets[d])[i];
            inst.jobs.push_back({next_id, 0, deadline, Rational(classes[d].second) * f(x)});
            meta.origins.push_back({next_id, classes[d].first, i, x});
            ++next_id;
        }
    }
    for (std::size_t g = 0; g <= n; ++g) {
        inst.jobs.push_back({next_id, 0, deadline, g == 0 ? Rational(2) : Rational(7, 4)});
        meta.origins.push_back({next_id, JobClass::Gadget, g, 0});
        meta.boundaries.push_back(4 * static_cast<Time>(g));
        ++next_id;
    }
    return {std::move(inst), std::move(meta)};
}

Schedule canonical_schedule_n3dm(const N3dmInstance& src, const ReductionMeta& meta,
                                 const MatchingCertificate& cert) {
    require_valid(src);
    check_certificate(src, cert);
    const std::size_t n = src.size();
    Schedule s = Schedule::idle(4 * static_cast<Time>(n) + 1);
    for (std::size_t g = 0; g <= n; ++g) {
        s.slots[4 * g] = meta.job_for(JobClass::Gadget, g).value();
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& t = cert.triples[i];
        s.slots[4 * i + 1] = meta.job_for(JobClass::A, t[0]).value();
        s.slots[4 * i + 2] = meta.job_for(JobClass::B, t[1]).value();
        s.slots[4 * i + 3] = meta.job_for(JobClass::C, t[2]).value();
    }
    return s;
}

MatchingCertificate extract_n3dm_matching(const Instance& instance, const ReductionMeta& meta,
                                          const Schedule& schedule) {
    require_full_throughput(instance, schedule);
    MatchingCertificate cert;
    const std::array<JobClass, 3> order{JobClass::A, JobClass::B, JobClass::C};
    for (std::size_t i = 0; i < meta.n; ++i) {
        std::array<std::size_t, 3> triple{};
        for (std::size_t d = 0; d < 3; ++d) {
            const auto& slot = schedule.slots.at(4 * i + 1 + d);
            const JobOrigin* origin = slot ? meta.origin_of(*slot) : nullptr;
            if (origin == nullptr || origin->cls != order[d]) {
                throw InvalidCertificate("block " + std::to_string(i + 1) + " position " +
                                         std::to_string(d + 1) + " does not hold a " +
                                         std::string(to_string(order[d])) + "-job");
            }
            triple[d] = origin->source_index;
        }
        cert.triples.push_back(triple);
    }
    return cert;
}

namespace {

bool partition_search(const ThreePartitionInstance& src, std::vector<bool>& used,
                      PartitionCertificate& out) {
    const std::size_t m = src.values.size();
    std::size_t first = 0;
    while (first < m && used[first]) ++first;
    if (first == m) return true;
    used[first] = true;
    for (std::size_t i = first + 1; i < m; ++i) {
        if (used[i]) continue;
        for (std::size_t k = i + 1; k < m; ++k) {
            if (used[k] || src.values[first] + src.values[i] + src.values[k] != src.beta) continue;
            used[i] = used[k] = true;
            out.triples.push_back({first, i, k});
            if (partition_search(src, used, out)) return true;
            out.triples.pop_back();
            used[i] = used[k] = false;
        }
    }
    used[first] = false;
    return false;
}

}  // namespace

std::optional<PartitionCertificate> brute_3partition(const ThreePartitionInstance& src) {
    require_valid(src);
    if (src.values.size() > kBrutePartitionMaxValues) {
        throw TooLarge("brute_3partition limited to " + std::to_string(kBrutePartitionMaxValues) +
                       " values");
    }
    std::vector<bool> used(src.values.size(), false);
    PartitionCertificate cert;
    if (partition_search(src, used, cert)) return cert;
    return std::nullopt;
}

std::optional<MatchingCertificate> brute_n3dm(const N3dmInstance& src) {
    require_valid(src);
    const std::size_t n = src.size();
    if (n > kBruteMatchingMaxN) {
        throw TooLarge("brute_n3dm limited to n = " + std::to_string(kBruteMatchingMaxN));
    }
    std::vector<std::size_t> pb(n), pc(n);
    std::iota(pb.begin(), pb.end(), 0);
    do {
        std::iota(pc.begin(), pc.end(), 0);
        do {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                ok = src.a[i] + src.b[pb[i]] + src.c[pc[i]] == src.beta;
            }
            if (ok) {
                MatchingCertificate cert;
                for (std::size_t i = 0; i < n; ++i) cert.triples.push_back({i, pb[i], pc[i]});
                return cert;
            }
        } while (std::next_permutation(pc.begin(), pc.end()));
    } while (std::next_permutation(pb.begin(), pb.end()));
    return std::nullopt;
}

}  // namespace thermo
