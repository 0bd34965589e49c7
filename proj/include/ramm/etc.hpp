#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ramm/core.hpp"

namespace ramm {

/// How a derived execution time is mapped onto the grid. `exact` keeps the
/// full rational; the integer modes round per entry. `nearest` sends halves
/// away from zero.
enum class RoundingMode { exact, ceil, nearest, floor };

RoundingMode parse_rounding_mode(std::string_view text);  // throws InputError
std::string_view to_string(RoundingMode mode);

/// Builds the execution-time grid from workload and machine specifications:
/// entry (i, j) is instruction_volume_i / processing_speed_j +
/// data_volume_i / bandwidth_j, rounded per `mode`.
///
/// Throws InputError on empty lists, negative volumes, or a resource with
/// zero/negative speed or bandwidth.
EtcMatrix derive_etc(std::span<const TaskSpec> tasks,
                     std::span<const ResourceSpec> resources,
                     RoundingMode mode = RoundingMode::exact);

/// Completion time of task i appended to resource j: execution time plus
/// the resource's accumulated ready time.
Duration completion_time(const EtcMatrix& etc, const ReadyTimes& ready,
                         TaskId task, ResourceId resource);

/// completion_time over the whole grid, row-major n x m.
std::vector<Duration> completion_matrix(const EtcMatrix& etc, const ReadyTimes& ready);

}  // namespace ramm
