#pragma once

#include <string>
#include <string_view>

#include "thermo/adversary.hpp"
#include "thermo/model.hpp"
#include "thermo/online.hpp"
#include "thermo/reductions.hpp"

namespace thermo {

// Canonical text formats. Rationals are written as lowest-terms "p/q" strings ("p" when
// the denominator is 1); on input "p/q" and finite decimals are both accepted. Objects
// are emitted with sorted keys, jobs sorted by id, two-space indentation and a trailing
// newline. All parse functions throw ParseError naming the line or field at fault.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

/// JSON array with one entry per slot: a job id or null.
Schedule parse_schedule(std::string_view text);
std::string serialize_schedule(const Schedule& schedule);

SimulationTrace parse_trace(std::string_view text);
std::string serialize_trace(const SimulationTrace& trace);

std::string serialize_online_run(const OnlineRun& run);
std::string serialize_transcript(const AdversaryTranscript& transcript);

RatioReport parse_report(std::string_view text);
std::string serialize_report(const RatioReport& report);
/// Fixed-width table, one row per policy.
std::string report_summary_table(const RatioReport& report);

ReductionMeta parse_meta(std::string_view text);
std::string serialize_meta(const ReductionMeta& meta);

/// Whitespace-separated integers, '#' starts a comment running to end of line.
///   3-Partition: n, then 3n values.           beta is derived as sum / n.
///   N3DM:        n beta, then n A, n B, n C values.
ThreePartitionInstance parse_three_partition_source(std::string_view text);
N3dmInstance parse_n3dm_source(std::string_view text);

}  // namespace thermo
