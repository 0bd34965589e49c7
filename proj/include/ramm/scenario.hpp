#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramm/core.hpp"
#include "ramm/etc.hpp"
#include "ramm/metrics.hpp"
#include "ramm/oracle.hpp"
#include "ramm/policies.hpp"

namespace ramm {

/// Scenario given as raw workload + machine specifications; the grid is
/// derived on demand.
struct WorkloadInput {
  std::vector<TaskSpec> tasks;
  std::vector<ResourceSpec> resources;
  RoundingMode rounding = RoundingMode::exact;
};

/// Scenario given as a ready-made execution-time grid with display labels.
struct MatrixInput {
  std::vector<std::string> task_names;
  std::vector<std::string> resource_names;
  EtcMatrix etc;
};

struct Scenario {
  std::string name;
  std::variant<WorkloadInput, MatrixInput> input;

  bool is_workload() const { return std::holds_alternative<WorkloadInput>(input); }
  std::vector<std::string> task_names() const;
  std::vector<std::string> resource_names() const;

  /// The grid policies run on. `rounding_override` replaces the workload
  /// form's stored mode; overriding a matrix scenario is an InputError,
  /// since its entries are already final.
  EtcMatrix etc_matrix(std::optional<RoundingMode> rounding_override = {}) const;
};

/// Reads one scenario JSON document (fixtures under scenarios/ show both
/// forms). Numbers are taken exactly: integers directly, floats via their
/// shortest decimal, strings through Rational::parse. Throws InputError
/// with field context on anything malformed.
Scenario parse_scenario(const std::string& text);

/// Canonical JSON rendering. parse_scenario(emit_scenario(s)) reproduces
/// the scenario exactly: integral values become JSON integers, everything
/// else an exact decimal or "p/q" string.
std::string emit_scenario(const Scenario& scenario);

/// Inclusive integer range for one generated magnitude.
struct ValueRange {
  long long lo = 1;
  long long hi = 1;
};

struct GeneratorSpec {
  std::uint64_t seed = 0;
  std::size_t tasks = 1;
  std::size_t resources = 1;
  ValueRange instruction_volume{100, 1000};
  ValueRange data_volume{10, 100};
  ValueRange processing_speed{10, 100};
  ValueRange bandwidth{10, 100};
  std::string name;  // empty -> synthesized from seed and dimensions
};

/// Deterministic workload-form scenario: the same spec always yields the
/// same bytes. Throws InputError on zero dimensions or an empty range.
Scenario generate_workload(const GeneratorSpec& spec);

struct PolicyRun {
  PolicyId policy = PolicyId::min_min;
  DivertVariant variant = DivertVariant::reselect;
  Schedule schedule;
  ScheduleMetrics metrics;
};

struct ComparisonReport {
  std::string scenario;
  std::vector<std::string> task_names;
  std::vector<std::string> resource_names;
  std::vector<PolicyRun> runs;
  std::optional<Duration> optimal;
};

struct CompareOptions {
  DivertVariant variant = DivertVariant::reselect;
  std::optional<RoundingMode> rounding;  // workload scenarios only
  bool with_oracle = false;
  std::uint64_t oracle_limit = kDefaultEnumerationLimit;
};

/// Runs every policy on the scenario's grid, computes metrics, and
/// optionally attaches the exhaustive optimum.
ComparisonReport compare_policies(const Scenario& scenario,
                                  const CompareOptions& options = {});

enum class ReportFormat { text, csv, json };

ReportFormat parse_report_format(std::string_view text);  // throws InputError

/// Renders reports as an aligned text table, CSV rows, or a JSON array.
/// Numbers are display-rendered: integers plain, fractions as decimals
/// with at most six places.
std::string emit_report(std::span<const ComparisonReport> reports,
                        ReportFormat format);

enum class GanttStyle { ascii, svg };

/// One row per resource in time order. ascii yields lines like
/// "R1 | T2[0-1] T3[1-4]"; svg yields one labeled rectangle per
/// assignment with x scaled by start time.
std::string render_gantt(const Schedule& schedule,
                         std::span<const std::string> task_names,
                         std::span<const std::string> resource_names,
                         GanttStyle style);

}  // namespace ramm
