#pragma once

#include <span>
#include <string>

#include "thermo/model.hpp"

namespace thermo {

enum class GanttFormat { Text, Svg };

/// Slot-aligned chart, one row per schedule. Each slot shows the job id (idle as "·",
/// a violating slot prefixed with "!"); slot boundaries carry the exact temperature as a
/// fraction and as a 4-significant-digit decimal. Temperatures equal to the threshold
/// are marked "*". Output is a pure function of the inputs.
std::string render_gantt(const Instance& instance, std::span<const Schedule> schedules, GanttFormat format);

inline std::string render_gantt(const Instance& instance, const Schedule& schedule, GanttFormat format) {
    return render_gantt(instance, std::span<const Schedule>(&schedule, 1), format);
}

}  // namespace thermo
