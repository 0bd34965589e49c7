#pragma once

#include <vector>

#include "ramm/core.hpp"

namespace ramm {

struct ScheduleMetrics {
  Duration makespan;
  std::vector<Duration> loads;        // per resource, sum of assigned durations
  Duration imbalance;                 // (max load - min load) / max load, 0 for an empty makespan
  std::vector<Duration> waiting;      // per task, time spent queued before starting
  std::vector<Duration> utilization;  // per resource, load / makespan

  bool operator==(const ScheduleMetrics&) const = default;
};

ScheduleMetrics compute_metrics(const Schedule& schedule);

}  // namespace ramm
