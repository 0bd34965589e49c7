#include "ramm/policies.hpp"

#include <optional>

#include "ramm/etc.hpp"

namespace ramm {
namespace {

// Shared mapping-loop state. Selection scans visit tasks and resources in
// ascending index order with strict improvement only, so the documented
// tie-break (lowest task index, then lowest resource index) falls out of the
// scan itself.
struct MappingLoop {
  explicit MappingLoop(const EtcMatrix& etc)
      : etc(etc), ready(initial_ready_times(etc.resource_count())),
        remaining(etc.task_count(), true), left(etc.task_count()) {
    order.reserve(etc.task_count());
  }

  const EtcMatrix& etc;
  ReadyTimes ready;
  std::vector<bool> remaining;
  std::size_t left;
  std::vector<std::pair<TaskId, ResourceId>> order;

  Duration ct(TaskId i, ResourceId j) const { return completion_time(etc, ready, i, j); }

  bool busy(ResourceId j) const { return ready[j] > Duration(0); }

  bool any_idle() const {
    for (ResourceId j = 0; j < etc.resource_count(); ++j) {
      if (!busy(j)) return true;
    }
    return false;
  }

  void assign(TaskId i, ResourceId j) {
    order.emplace_back(i, j);
    ready[j] += etc.at(i, j);
    remaining[i] = false;
    --left;
  }

  // Task attaining the extreme execution time over all remaining
  // (task, resource) entries.
  TaskId pick_task_by_et(bool want_max) const {
    std::optional<Duration> best;
    TaskId pick = 0;
    for (TaskId i = 0; i < etc.task_count(); ++i) {
      if (!remaining[i]) continue;
      for (ResourceId j = 0; j < etc.resource_count(); ++j) {
        const Duration& v = etc.at(i, j);
        if (!best || (want_max ? v > *best : v < *best)) {
          best = v;
          pick = i;
        }
      }
    }
    return pick;
  }

  // Minimum-completion-time resource for one task.
  ResourceId best_resource_for(TaskId i) const {
    ResourceId pick = 0;
    Duration best = ct(i, 0);
    for (ResourceId j = 1; j < etc.resource_count(); ++j) {
      Duration v = ct(i, j);
      if (v < best) {
        best = v;
        pick = j;
      }
    }
    return pick;
  }

  Schedule finish() const { return build_schedule(order, etc); }
};

}  // namespace

PolicyId parse_policy(std::string_view text) {
  if (text == "min-min") return PolicyId::min_min;
  if (text == "max-min") return PolicyId::max_min;
  if (text == "improved-max-min") return PolicyId::improved_max_min;
  if (text == "ramm") return PolicyId::ramm;
  throw InputError("unknown policy '" + std::string(text) +
                   "' (expected min-min, max-min, improved-max-min or ramm)");
}

DivertVariant parse_variant(std::string_view text) {
  if (text == "reselect") return DivertVariant::reselect;
  if (text == "strict") return DivertVariant::strict;
  throw InputError("unknown variant '" + std::string(text) +
                   "' (expected reselect or strict)");
}

std::string_view to_string(PolicyId policy) {
  switch (policy) {
    case PolicyId::min_min: return "min-min";
    case PolicyId::max_min: return "max-min";
    case PolicyId::improved_max_min: return "improved-max-min";
    case PolicyId::ramm: return "ramm";
  }
  return "min-min";
}

std::string_view to_string(DivertVariant variant) {
  return variant == DivertVariant::strict ? "strict" : "reselect";
}

Schedule min_min(const EtcMatrix& etc) {
  MappingLoop loop(etc);
  while (loop.left > 0) {
    std::optional<Duration> best;
    TaskId task = 0;
    ResourceId resource = 0;
    for (TaskId i = 0; i < etc.task_count(); ++i) {
      if (!loop.remaining[i]) continue;
      for (ResourceId j = 0; j < etc.resource_count(); ++j) {
        Duration v = loop.ct(i, j);
        if (!best || v < *best) {
          best = v;
          task = i;
          resource = j;
        }
      }
    }
    loop.assign(task, resource);
  }
  return loop.finish();
}

Schedule max_min(const EtcMatrix& etc) {
  MappingLoop loop(etc);
  while (loop.left > 0) {
    // Task holding the largest completion time anywhere in the grid.
    std::optional<Duration> worst;
    TaskId task = 0;
    for (TaskId i = 0; i < etc.task_count(); ++i) {
      if (!loop.remaining[i]) continue;
      for (ResourceId j = 0; j < etc.resource_count(); ++j) {
        Duration v = loop.ct(i, j);
        if (!worst || v > *worst) {
          worst = v;
          task = i;
        }
      }
    }
    // Placed on its fastest resource by raw execution time.
    ResourceId resource = 0;
    Duration best_et = etc.at(task, 0);
    for (ResourceId j = 1; j < etc.resource_count(); ++j) {
      if (etc.at(task, j) < best_et) {
        best_et = etc.at(task, j);
        resource = j;
      }
    }
    loop.assign(task, resource);
  }
  return loop.finish();
}

Schedule improved_max_min(const EtcMatrix& etc, DivertVariant variant) {
  MappingLoop loop(etc);
  while (loop.left > 0) {
    TaskId task = loop.pick_task_by_et(/*want_max=*/true);
    ResourceId target = loop.best_resource_for(task);
    if (variant == DivertVariant::reselect && loop.busy(target) && loop.any_idle()) {
      // Each idle resource nominates its own largest-execution-time task;
      // the (task, resource) pair with the smallest completion time wins,
      // ties by resource index.
      std::optional<Duration> best;
      TaskId divert_task = 0;
      ResourceId divert_to = 0;
      for (ResourceId j = 0; j < etc.resource_count(); ++j) {
        if (loop.busy(j)) continue;
        TaskId champion = 0;
        std::optional<Duration> largest;
        for (TaskId i = 0; i < etc.task_count(); ++i) {
          if (!loop.remaining[i]) continue;
          if (!largest || etc.at(i, j) > *largest) {
            largest = etc.at(i, j);
            champion = i;
          }
        }
        Duration v = loop.ct(champion, j);
        if (!best || v < *best) {
          best = v;
          divert_task = champion;
          divert_to = j;
        }
      }
      loop.assign(divert_task, divert_to);
    } else {
      loop.assign(task, target);
    }
  }
  return loop.finish();
}

Schedule resource_aware_min_min(const EtcMatrix& etc, DivertVariant variant) {
  MappingLoop loop(etc);
  while (loop.left > 0) {
    TaskId task = loop.pick_task_by_et(/*want_max=*/false);
    ResourceId target = loop.best_resource_for(task);
    if (loop.busy(target) && loop.any_idle()) {
      if (variant == DivertVariant::strict) {
        // The chosen task itself moves to the idle resource where it
        // completes soonest.
        std::optional<Duration> best;
        ResourceId divert_to = 0;
        for (ResourceId j = 0; j < etc.resource_count(); ++j) {
          if (loop.busy(j)) continue;
          Duration v = loop.ct(task, j);
          if (!best || v < *best) {
            best = v;
            divert_to = j;
          }
        }
        loop.assign(task, divert_to);
      } else {
        // The idle resource is filled with whichever remaining task
        // completes soonest on it; over several idle resources the
        // minimum-completion pair wins, ties by resource then task index.
        std::optional<Duration> best;
        TaskId divert_task = 0;
        ResourceId divert_to = 0;
        for (ResourceId j = 0; j < etc.resource_count(); ++j) {
          if (loop.busy(j)) continue;
          for (TaskId i = 0; i < etc.task_count(); ++i) {
            if (!loop.remaining[i]) continue;
            Duration v = loop.ct(i, j);
            if (!best || v < *best) {
              best = v;
              divert_task = i;
              divert_to = j;
            }
          }
        }
        loop.assign(divert_task, divert_to);
      }
    } else {
      // Idle target, or every resource busy: the globally
      // minimum-completion-time resource takes the task.
      loop.assign(task, target);
    }
  }
  return loop.finish();
}

Schedule run_policy(PolicyId policy, const EtcMatrix& etc, DivertVariant variant) {
  switch (policy) {
    case PolicyId::min_min: return min_min(etc);
    case PolicyId::max_min: return max_min(etc);
    case PolicyId::improved_max_min: return improved_max_min(etc, variant);
    case PolicyId::ramm: return resource_aware_min_min(etc, variant);
  }
  throw InputError("unknown policy id");
}

}  // namespace ramm
