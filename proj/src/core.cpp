#include "ramm/core.hpp"

namespace ramm {
namespace {

void check_dimensions(std::size_t tasks, std::size_t resources) {
  if (tasks == 0) throw InputError("task count must be at least 1");
  if (resources == 0) throw InputError("resource count must be at least 1");
}

std::string id_text(const char* what, std::size_t id) {
  return std::string(what) + " " + std::to_string(id);
}

}  // namespace

EtcMatrix::EtcMatrix(std::size_t task_count, std::size_t resource_count)
    : tasks_(task_count),
      resources_(resource_count),
      entries_(task_count * resource_count) {
  check_dimensions(task_count, resource_count);
}

EtcMatrix::EtcMatrix(std::size_t task_count, std::size_t resource_count,
                     std::vector<Duration> entries)
    : tasks_(task_count), resources_(resource_count), entries_(std::move(entries)) {
  check_dimensions(task_count, resource_count);
  if (entries_.size() != tasks_ * resources_) {
    throw InputError("execution time grid has " + std::to_string(entries_.size()) +
                     " entries, expected " + std::to_string(tasks_ * resources_));
  }
  for (const Duration& d : entries_) {
    if (d.is_negative()) throw InputError("execution times must be non-negative");
  }
}

const Duration& EtcMatrix::at(TaskId task, ResourceId resource) const {
  if (task >= tasks_ || resource >= resources_) {
    throw std::out_of_range("etc index (" + std::to_string(task) + ", " +
                            std::to_string(resource) + ") out of range");
  }
  return entries_[task * resources_ + resource];
}

Duration& EtcMatrix::at(TaskId task, ResourceId resource) {
  return const_cast<Duration&>(std::as_const(*this).at(task, resource));
}

ReadyTimes initial_ready_times(std::size_t resource_count) {
  return ReadyTimes(resource_count);
}

const char* to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::duplicate_task: return "duplicate-task";
    case DiagnosticKind::missing_task: return "missing-task";
    case DiagnosticKind::task_out_of_range: return "task-out-of-range";
    case DiagnosticKind::resource_out_of_range: return "resource-out-of-range";
    case DiagnosticKind::resource_count_mismatch: return "resource-count-mismatch";
    case DiagnosticKind::negative_start: return "negative-start";
    case DiagnosticKind::wrong_duration: return "wrong-duration";
    case DiagnosticKind::gap: return "gap";
    case DiagnosticKind::overlap: return "overlap";
    case DiagnosticKind::wrong_makespan: return "wrong-makespan";
  }
  return "unknown";
}

Schedule build_schedule(const std::vector<std::pair<TaskId, ResourceId>>& order,
                        const EtcMatrix& etc) {
  const std::size_t n = etc.task_count();
  if (order.size() != n) {
    throw InputError("malformed order: " + std::to_string(order.size()) +
                     " entries for " + std::to_string(n) + " tasks");
  }
  std::vector<bool> seen(n, false);
  Schedule schedule;
  schedule.resource_count = etc.resource_count();
  schedule.assignments.reserve(n);
  ReadyTimes ready = initial_ready_times(etc.resource_count());
  for (const auto& [task, resource] : order) {
    if (task >= n) throw std::out_of_range(id_text("task", task) + " out of range");
    if (resource >= etc.resource_count()) {
      throw std::out_of_range(id_text("resource", resource) + " out of range");
    }
    if (seen[task]) throw InputError("malformed order: " + id_text("task", task) + " repeated");
    seen[task] = true;
    Duration start = ready[resource];
    Duration finish = start + etc.at(task, resource);
    schedule.assignments.push_back({task, resource, start, finish});
    ready[resource] = finish;
    if (schedule.makespan < finish) schedule.makespan = finish;
  }
  return schedule;
}

std::vector<Diagnostic> validate_schedule(const Schedule& schedule,
                                          const EtcMatrix& etc) {
  std::vector<Diagnostic> diags;
  auto report = [&](DiagnosticKind kind, std::string detail) {
    diags.push_back({kind, std::move(detail)});
  };

  const std::size_t n = etc.task_count();
  const std::size_t m = etc.resource_count();
  if (schedule.resource_count != m) {
    report(DiagnosticKind::resource_count_mismatch,
           "schedule declares " + std::to_string(schedule.resource_count) +
               " resources, etc has " + std::to_string(m));
  }

  std::vector<int> times_seen(n, 0);
  ReadyTimes expected_start = initial_ready_times(m);
  Duration max_finish;
  for (const Assignment& a : schedule.assignments) {
    if (a.task >= n) {
      report(DiagnosticKind::task_out_of_range, id_text("task", a.task));
      continue;
    }
    if (a.resource >= m) {
      report(DiagnosticKind::resource_out_of_range, id_text("resource", a.resource));
      continue;
    }
    if (++times_seen[a.task] == 2) {
      report(DiagnosticKind::duplicate_task, id_text("task", a.task));
    }
    if (a.start.is_negative()) {
      report(DiagnosticKind::negative_start,
             id_text("task", a.task) + " starts at " + a.start.to_display_string());
    }
    const Duration& et = etc.at(a.task, a.resource);
    if (a.finish - a.start != et) {
      report(DiagnosticKind::wrong_duration,
             id_text("task", a.task) + " runs " + (a.finish - a.start).to_display_string() +
                 ", expected " + et.to_display_string());
    }
    if (a.start > expected_start[a.resource]) {
      report(DiagnosticKind::gap,
             id_text("resource", a.resource) + " idles before " + id_text("task", a.task));
    } else if (a.start < expected_start[a.resource]) {
      report(DiagnosticKind::overlap,
             id_text("task", a.task) + " overlaps previous work on " +
                 id_text("resource", a.resource));
    }
    expected_start[a.resource] = a.finish;
    if (max_finish < a.finish) max_finish = a.finish;
  }
  for (TaskId t = 0; t < n; ++t) {
    if (times_seen[t] == 0) report(DiagnosticKind::missing_task, id_text("task", t));
  }
  if (schedule.makespan != max_finish) {
    report(DiagnosticKind::wrong_makespan,
           "cached " + schedule.makespan.to_display_string() + ", actual " +
               max_finish.to_display_string());
  }
  return diags;
}

}  // namespace ramm
