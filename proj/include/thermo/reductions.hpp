#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thermo/model.hpp"

namespace thermo {

/// 3n positive integers with beta/4 < a_i < beta/2 and sum = n * beta.
struct ThreePartitionInstance {
    std::vector<std::int64_t> values;
    std::int64_t beta = 0;

    std::size_t groups() const { return values.size() / 3; }
};

/// Builds a source instance, deriving beta = sum / n. Throws InvalidSource when the
/// sum is not divisible or a value falls outside (beta/4, beta/2).
ThreePartitionInstance make_three_partition(std::vector<std::int64_t> values);

/// Numerical 3-dimensional matching: |A| = |B| = |C| = n, every x <= beta,
/// sum of all elements = n * beta.
struct N3dmInstance {
    std::vector<std::int64_t> a, b, c;
    std::int64_t beta = 0;

    std::size_t size() const { return a.size(); }
};

/// Largest source value accepted by the 3-Partition generator. Element heats carry a
/// denominator of 2^(a_i - 1).
inline constexpr std::int64_t kMaxPartitionValue = 64;

void require_valid(const ThreePartitionInstance& src);
void require_valid(const N3dmInstance& src);

enum class JobClass { Element, Gadget, A, B, C };

std::string_view to_string(JobClass cls);
std::optional<JobClass> job_class_from_string(std::string_view text);

/// Provenance of a generated job. source_index is the index into the source list
/// (values, or a/b/c), or the gadget ordinal for gadgets.
struct JobOrigin {
    JobId job = 0;
    JobClass cls = JobClass::Element;
    std::size_t source_index = 0;
    std::int64_t value = 0;

    bool operator==(const JobOrigin&) const = default;
};

enum class ReductionKind { ThreePartition, N3dm };

struct ReductionMeta {
    ReductionKind kind = ReductionKind::ThreePartition;
    std::size_t n = 0;
    std::int64_t beta = 0;
    std::vector<JobOrigin> origins;  // ascending job id
    /// Gadget slots, ascending. They bound the intervals (3-Partition) or blocks (N3DM).
    std::vector<Time> boundaries;

    const JobOrigin* origin_of(JobId job) const;
    std::optional<JobId> job_for(JobClass cls, std::size_t source_index) const;

    bool operator==(const ReductionMeta&) const = default;
};

/// Triples of source indices.
struct PartitionCertificate {
    std::vector<std::array<std::size_t, 3>> triples;
};

/// Triples (index into A, index into B, index into C).
struct MatchingCertificate {
    std::vector<std::array<std::size_t, 3>> triples;
};

/// Throw InvalidCertificate unless the certificate covers the source exactly once with
/// every triple summing to beta.
void check_certificate(const ThreePartitionInstance& src, const PartitionCertificate& cert);
void check_certificate(const N3dmInstance& src, const MatchingCertificate& cert);

/// Sorted value triples, sorted; equal for certificates that differ only in order.
std::vector<std::array<std::int64_t, 3>> canonical_triples(const ThreePartitionInstance& src,
                                                           const PartitionCertificate& cert);
std::vector<std::array<std::int64_t, 3>> canonical_triples(const N3dmInstance& src,
                                                           const MatchingCertificate& cert);

/// 4n jobs: element job i has heat 2 - 2^(1-a_i), window [1, n(beta+1)); tight gadgets
/// at slots j(beta+1), the first with heat 2 and the rest with heat 1.
std::pair<Instance, ReductionMeta> gen_from_3partition(const ThreePartitionInstance& src);

/// Gadgets at their release slots; each interval holds one triple, every element job
/// preceded by a_i - 1 idle slots.
Schedule canonical_schedule_3partition(const ThreePartitionInstance& src, const ReductionMeta& meta,
                                       const PartitionCertificate& cert);

/// Groups element jobs by the gadget-delimited interval they run in.
/// Throws NotFullThroughput unless the schedule completes all 4n jobs cleanly.
PartitionCertificate extract_3partition(const Instance& instance, const ReductionMeta& meta,
                                        const Schedule& schedule);

/// 4n+1 jobs, all with window [0, 4n+1). With f(x) = (1/25)(1 + x/(8 beta)): A-jobs 8f(a),
/// B-jobs 4f(b), C-jobs 2f(c); one gadget of heat 2 and n gadgets of heat 7/4.
std::pair<Instance, ReductionMeta> gen_from_n3dm(const N3dmInstance& src);

/// Heat-2 gadget at slot 0, 7/4 gadgets at slots 4i, block i runs A, B, C of triple i.
Schedule canonical_schedule_n3dm(const N3dmInstance& src, const ReductionMeta& meta,
                                 const MatchingCertificate& cert);

/// Reads (a_i, b_i, c_i) from block i. Throws NotFullThroughput unless all 4n+1 jobs
/// complete cleanly.
MatchingCertificate extract_n3dm_matching(const Instance& instance, const ReductionMeta& meta,
                                          const Schedule& schedule);

inline constexpr std::size_t kBrutePartitionMaxValues = 12;
inline constexpr std::size_t kBruteMatchingMaxN = 6;

/// Exhaustive search; nullopt when no 3-partition exists. Throws TooLarge above 12 values.
std::optional<PartitionCertificate> brute_3partition(const ThreePartitionInstance& src);

/// Exhaustive search over pairs of permutations of B and C. Throws TooLarge above n = 6.
std::optional<MatchingCertificate> brute_n3dm(const N3dmInstance& src);

}  // namespace thermo
