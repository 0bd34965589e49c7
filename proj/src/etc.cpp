#include "ramm/etc.hpp"

namespace ramm {
namespace {

Duration apply_rounding(const Duration& value, RoundingMode mode) {
  switch (mode) {
    case RoundingMode::exact: return value;
    case RoundingMode::ceil: return value.ceil_value();
    case RoundingMode::nearest: return value.round_half_up();
    case RoundingMode::floor: return value.floor_value();
  }
  return value;
}

}  // namespace

RoundingMode parse_rounding_mode(std::string_view text) {
  if (text == "exact") return RoundingMode::exact;
  if (text == "ceil") return RoundingMode::ceil;
  if (text == "nearest") return RoundingMode::nearest;
  if (text == "floor") return RoundingMode::floor;
  throw InputError("unknown rounding mode '" + std::string(text) +
                   "' (expected exact, ceil, nearest or floor)");
}

std::string_view to_string(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::exact: return "exact";
    case RoundingMode::ceil: return "ceil";
    case RoundingMode::nearest: return "nearest";
    case RoundingMode::floor: return "floor";
  }
  return "exact";
}

EtcMatrix derive_etc(std::span<const TaskSpec> tasks,
                     std::span<const ResourceSpec> resources, RoundingMode mode) {
  if (tasks.empty()) throw InputError("task list is empty");
  if (resources.empty()) throw InputError("resource list is empty");
  for (const ResourceSpec& r : resources) {
    if (!(r.processing_speed > Rational(0)) || !(r.bandwidth > Rational(0))) {
      throw InputError("resource '" + r.name +
                       "' needs positive processing speed and bandwidth");
    }
  }
  for (const TaskSpec& t : tasks) {
    if (t.instruction_volume.is_negative() || t.data_volume.is_negative()) {
      throw InputError("task '" + t.name + "' has negative volume");
    }
  }
  EtcMatrix etc(tasks.size(), resources.size());
  for (TaskId i = 0; i < tasks.size(); ++i) {
    for (ResourceId j = 0; j < resources.size(); ++j) {
      Duration raw = tasks[i].instruction_volume / resources[j].processing_speed +
                     tasks[i].data_volume / resources[j].bandwidth;
      etc.at(i, j) = apply_rounding(raw, mode);
    }
  }
  return etc;
}

Duration completion_time(const EtcMatrix& etc, const ReadyTimes& ready,
                         TaskId task, ResourceId resource) {
  if (resource >= ready.size()) {
    throw std::out_of_range("resource " + std::to_string(resource) + " out of range");
  }
  return etc.at(task, resource) + ready[resource];
}

std::vector<Duration> completion_matrix(const EtcMatrix& etc, const ReadyTimes& ready) {
  std::vector<Duration> grid;
  grid.reserve(etc.task_count() * etc.resource_count());
  for (TaskId i = 0; i < etc.task_count(); ++i) {
    for (ResourceId j = 0; j < etc.resource_count(); ++j) {
      grid.push_back(completion_time(etc, ready, i, j));
    }
  }
  return grid;
}

}  // namespace ramm
