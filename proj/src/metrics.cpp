#include "ramm/metrics.hpp"

#include <algorithm>

namespace ramm {

ScheduleMetrics compute_metrics(const Schedule& schedule) {
  ScheduleMetrics metrics;
  metrics.loads.assign(schedule.resource_count, Duration(0));

  std::size_t task_count = schedule.assignments.size();
  metrics.waiting.assign(task_count, Duration(0));
  for (const Assignment& a : schedule.assignments) {
    metrics.loads[a.resource] += a.finish - a.start;
    metrics.waiting[a.task] = a.start;
  }

  metrics.makespan = Duration(0);
  Duration min_load = metrics.loads.empty() ? Duration(0) : metrics.loads.front();
  for (const Duration& load : metrics.loads) {
    metrics.makespan = std::max(metrics.makespan, load);
    min_load = std::min(min_load, load);
  }

  bool idle_system = metrics.makespan == Duration(0);
  metrics.imbalance =
      idle_system ? Duration(0) : (metrics.makespan - min_load) / metrics.makespan;

  metrics.utilization.reserve(metrics.loads.size());
  for (const Duration& load : metrics.loads) {
    metrics.utilization.push_back(idle_system ? Duration(0) : load / metrics.makespan);
  }
  return metrics;
}

}  // namespace ramm
