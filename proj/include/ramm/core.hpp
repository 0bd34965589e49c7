#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramm/rational.hpp"

namespace ramm {

/// Malformed or inconsistent input (scenario files, orders, specs).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance exceeds a configured enumeration bound.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using TaskId = std::size_t;
using ResourceId = std::size_t;

/// One task of the batch. Tasks are identified by their dense index in the
/// containing list; `name` is only a display label.
struct TaskSpec {
  std::string name;
  Rational instruction_volume;  // MI
  Rational data_volume;         // Mb
};

/// One resource (machine / VM). Same dense-index identification.
struct ResourceSpec {
  std::string name;
  Rational processing_speed;  // MIPS, > 0
  Rational bandwidth;         // Mbps, > 0
};

/// n x m grid of expected execution times: at(i, j) is the time resource j
/// needs to run task i in isolation. The single input every policy consumes.
class EtcMatrix {
 public:
  EtcMatrix(std::size_t task_count, std::size_t resource_count);
  EtcMatrix(std::size_t task_count, std::size_t resource_count,
            std::vector<Duration> entries);

  std::size_t task_count() const { return tasks_; }
  std::size_t resource_count() const { return resources_; }

  const Duration& at(TaskId task, ResourceId resource) const;
  Duration& at(TaskId task, ResourceId resource);

  friend bool operator==(const EtcMatrix&, const EtcMatrix&) = default;

 private:
  std::size_t tasks_ = 0;
  std::size_t resources_ = 0;
  std::vector<Duration> entries_;  // row-major, tasks_ x resources_
};

/// Accumulated committed load per resource during the mapping loop.
using ReadyTimes = std::vector<Duration>;

/// All-zero ready times: every resource starts free.
ReadyTimes initial_ready_times(std::size_t resource_count);

/// One Gantt bar: task runs on resource over [start, finish).
struct Assignment {
  TaskId task = 0;
  ResourceId resource = 0;
  Duration start;
  Duration finish;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// A complete mapping in policy production order. Bars on one resource are
/// back-to-back from time 0; `makespan` caches the maximum finish.
struct Schedule {
  std::vector<Assignment> assignments;
  Duration makespan;
  std::size_t resource_count = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class DiagnosticKind {
  duplicate_task,
  missing_task,
  task_out_of_range,
  resource_out_of_range,
  resource_count_mismatch,
  negative_start,
  wrong_duration,
  gap,
  overlap,
  wrong_makespan,
};

const char* to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::string detail;
};

/// Materializes an assignment order into a Schedule against `etc`: on each
/// resource, tasks start back-to-back at 0 in list order.
///
/// Throws InputError when `order` misses or repeats a task,
/// std::out_of_range on invalid ids.
Schedule build_schedule(const std::vector<std::pair<TaskId, ResourceId>>& order,
                        const EtcMatrix& etc);

/// Checks every Schedule invariant against `etc` and returns one diagnostic
/// per violation; an empty result means the schedule is feasible.
std::vector<Diagnostic> validate_schedule(const Schedule& schedule,
                                          const EtcMatrix& etc);

}  // namespace ramm
