#include "ramm/scenario.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "json.hpp"

namespace ramm {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

void expect_keys(const Json& obj, const std::string& where,
                 std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](std::string_view k) { return item.key() == k; });
    if (!known) fail(where, "unknown field \"" + item.key() + "\"");
  }
}

const Json& require(const Json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string read_string(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

Rational read_rational(const Json& v, const std::string& where) {
  try {
    if (v.is_number_unsigned()) {
      auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw std::overflow_error("value does not fit in 64 bits");
      return Rational(static_cast<long long>(u));
    }
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "expected a number or numeric string");
}

Rational read_nonnegative(const Json& v, const std::string& where) {
  Rational r = read_rational(v, where);
  if (r.is_negative()) fail(where, "negative value");
  return r;
}

Rational read_positive(const Json& v, const std::string& where) {
  Rational r = read_rational(v, where);
  if (r <= Rational(0)) fail(where, "value must be positive");
  return r;
}

std::vector<TaskSpec> read_tasks(const Json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) fail(where, "expected a non-empty array");
  std::vector<TaskSpec> tasks;
  tasks.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string at = where + "[" + std::to_string(i) + "]";
    const Json& t = arr[i];
    if (!t.is_object()) fail(at, "expected an object");
    expect_keys(t, at, {"id", "mi", "mb"});
    TaskSpec spec;
    spec.name = read_string(require(t, at, "id"), at + ".id");
    spec.instruction_volume = read_nonnegative(require(t, at, "mi"), at + ".mi");
    spec.data_volume = read_nonnegative(require(t, at, "mb"), at + ".mb");
    tasks.push_back(std::move(spec));
  }
  return tasks;
}

std::vector<ResourceSpec> read_resources(const Json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) fail(where, "expected a non-empty array");
  std::vector<ResourceSpec> resources;
  resources.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string at = where + "[" + std::to_string(i) + "]";
    const Json& r = arr[i];
    if (!r.is_object()) fail(at, "expected an object");
    expect_keys(r, at, {"id", "mips", "mbps"});
    ResourceSpec spec;
    spec.name = read_string(require(r, at, "id"), at + ".id");
    spec.processing_speed = read_positive(require(r, at, "mips"), at + ".mips");
    spec.bandwidth = read_positive(require(r, at, "mbps"), at + ".mbps");
    resources.push_back(std::move(spec));
  }
  return resources;
}

std::vector<std::string> read_names(const Json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) fail(where, "expected a non-empty array");
  std::vector<std::string> names;
  names.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    names.push_back(read_string(arr[i], where + "[" + std::to_string(i) + "]"));
  return names;
}

MatrixInput read_matrix(const Json& jm, const std::string& where) {
  expect_keys(jm, where, {"tasks", "resources", "rows"});
  auto task_names = read_names(require(jm, where, "tasks"), where + ".tasks");
  auto resource_names = read_names(require(jm, where, "resources"), where + ".resources");
  const Json& rows = require(jm, where, "rows");
  if (!rows.is_array() || rows.size() != task_names.size())
    fail(where + ".rows",
         "expected " + std::to_string(task_names.size()) + " rows, one per task");
  std::vector<Duration> entries;
  entries.reserve(task_names.size() * resource_names.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string at = where + ".rows[" + std::to_string(i) + "]";
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != resource_names.size())
      fail(at, "expected " + std::to_string(resource_names.size()) +
                   " entries, one per resource");
    for (std::size_t j = 0; j < row.size(); ++j)
      entries.push_back(read_nonnegative(row[j], at + "[" + std::to_string(j) + "]"));
  }
  EtcMatrix etc(task_names.size(), resource_names.size(), std::move(entries));
  return MatrixInput{std::move(task_names), std::move(resource_names), std::move(etc)};
}

Json rational_json(const Rational& v) {
  if (v.is_integer()) return v.numerator();
  return v.to_exact_string();
}

std::string display(const Rational& v) { return v.to_display_string(); }

// Display name with a positional fallback so rendering never depends on the
// caller supplying a complete label list.
std::string label(std::span<const std::string> names, std::size_t index, char prefix) {
  if (index < names.size() && !names[index].empty()) return names[index];
  return std::string(1, prefix) + std::to_string(index + 1);
}

long long uniform_draw(std::mt19937_64& rng, const ValueRange& range) {
  auto span = static_cast<std::uint64_t>(range.hi - range.lo) + 1;
  std::uint64_t threshold = (0 - span) % span;  // 2^64 mod span
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return range.lo + static_cast<long long>(x % span);
  }
}

void check_range(const ValueRange& range, const char* field) {
  if (range.lo < 1 || range.hi < range.lo)
    throw InputError(std::string("generator range for ") + field +
                     " must satisfy 1 <= lo <= hi, got " + std::to_string(range.lo) +
                     ":" + std::to_string(range.hi));
}

std::vector<std::vector<const Assignment*>> bars_by_resource(const Schedule& s) {
  std::vector<std::vector<const Assignment*>> per(s.resource_count);
  for (const Assignment& a : s.assignments) per[a.resource].push_back(&a);
  for (auto& bars : per)
    std::stable_sort(bars.begin(), bars.end(),
                     [](const Assignment* x, const Assignment* y) { return x->start < y->start; });
  return per;
}

std::string render_ascii(const Schedule& s, std::span<const std::string> task_names,
                         std::span<const std::string> resource_names) {
  auto per = bars_by_resource(s);
  std::vector<std::string> labels(s.resource_count);
  std::size_t width = 0;
  for (ResourceId j = 0; j < s.resource_count; ++j) {
    labels[j] = label(resource_names, j, 'R');
    width = std::max(width, labels[j].size());
  }
  std::string out;
  for (ResourceId j = 0; j < s.resource_count; ++j) {
    std::string line = labels[j];
    line.append(width - labels[j].size(), ' ');
    line += " |";
    for (const Assignment* a : per[j]) {
      line += " " + label(task_names, a->task, 'T') + "[" + display(a->start) + "-" +
              display(a->finish) + "]";
    }
    out += line;
    out += '\n';
  }
  return out;
}

double to_double(const Rational& v) {
  return static_cast<double>(v.numerator()) / static_cast<double>(v.denominator());
}

std::string format_px(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr double kScale = 60.0;      // px per time unit
constexpr double kRowHeight = 44.0;
constexpr double kBarHeight = 28.0;
constexpr double kLeftMargin = 80.0;
constexpr double kTopMargin = 8.0;

constexpr std::array<const char*, 8> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
    "#59a14f", "#edc948", "#b07aa1", "#9c755f"};

std::string render_svg(const Schedule& s, std::span<const std::string> task_names,
                       std::span<const std::string> resource_names) {
  auto per = bars_by_resource(s);
  double width = kLeftMargin + to_double(s.makespan) * kScale + 16.0;
  double height = kTopMargin + static_cast<double>(s.resource_count) * kRowHeight + 8.0;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    format_px(width) + "\" height=\"" + format_px(height) +
                    "\" viewBox=\"0 0 " + format_px(width) + " " + format_px(height) +
                    "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (ResourceId j = 0; j < s.resource_count; ++j) {
    double row_top = kTopMargin + static_cast<double>(j) * kRowHeight;
    double mid = row_top + kRowHeight / 2.0;
    out += "  <text x=\"4\" y=\"" + format_px(mid + 4.0) + "\">" +
           xml_escape(label(resource_names, j, 'R')) + "</text>\n";
    for (const Assignment* a : per[j]) {
      double x = kLeftMargin + to_double(a->start) * kScale;
      double w = to_double(a->finish - a->start) * kScale;
      double y = row_top + (kRowHeight - kBarHeight) / 2.0;
      std::string task = xml_escape(label(task_names, a->task, 'T'));
      out += "  <rect x=\"" + format_px(x) + "\" y=\"" + format_px(y) + "\" width=\"" +
             format_px(w) + "\" height=\"" + format_px(kBarHeight) + "\" fill=\"" +
             kPalette[a->task % kPalette.size()] + "\" stroke=\"#333333\"><title>" +
             task + "[" + display(a->start) + "-" + display(a->finish) +
             "]</title></rect>\n";
      out += "  <text x=\"" + format_px(x + w / 2.0) + "\" y=\"" + format_px(mid + 4.0) +
             "\" text-anchor=\"middle\">" + task + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

const PolicyRun* find_run(const ComparisonReport& report, PolicyId policy) {
  for (const PolicyRun& run : report.runs)
    if (run.policy == policy) return &run;
  return nullptr;
}

std::string emit_text(std::span<const ComparisonReport> reports) {
  std::vector<PolicyId> columns;
  for (PolicyId p : kAllPolicies) {
    bool present = std::any_of(reports.begin(), reports.end(),
                               [&](const ComparisonReport& r) { return find_run(r, p); });
    if (present) columns.push_back(p);
  }
  bool with_optimal =
      std::any_of(reports.begin(), reports.end(),
                  [](const ComparisonReport& r) { return r.optimal.has_value(); });

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"scenario"};
  for (PolicyId p : columns) header.emplace_back(to_string(p));
  if (with_optimal) header.emplace_back("optimal");
  grid.push_back(std::move(header));
  for (const ComparisonReport& report : reports) {
    std::vector<std::string> row{report.scenario};
    for (PolicyId p : columns) {
      const PolicyRun* run = find_run(report, p);
      row.push_back(run ? display(run->metrics.makespan) : std::string());
    }
    if (with_optimal)
      row.push_back(report.optimal ? display(*report.optimal) : std::string());
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());

  std::string out;
  for (const ComparisonReport& report : reports) {
    if (!report.runs.empty()) {
      out += "variant: ";
      out += to_string(report.runs.front().variant);
      out += "\n\n";
      break;
    }
  }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(widths[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string packed_loads(const ScheduleMetrics& metrics) {
  std::string out;
  for (std::size_t j = 0; j < metrics.loads.size(); ++j) {
    if (j > 0) out += ';';
    out += display(metrics.loads[j]);
  }
  return out;
}

std::string packed_assignments(const ComparisonReport& report, const Schedule& schedule) {
  std::string out;
  for (std::size_t k = 0; k < schedule.assignments.size(); ++k) {
    const Assignment& a = schedule.assignments[k];
    if (k > 0) out += ';';
    out += label(report.task_names, a.task, 'T') + ":" +
           label(report.resource_names, a.resource, 'R') + ":" + display(a.start) +
           ":" + display(a.finish);
  }
  return out;
}

std::string emit_csv(std::span<const ComparisonReport> reports) {
  std::string out = "scenario,policy,variant,makespan,imbalance,loads,assignments\n";
  auto row = [&out](std::initializer_list<std::string> fields) {
    bool first = true;
    for (const std::string& f : fields) {
      if (!first) out += ',';
      out += csv_field(f);
      first = false;
    }
    out += '\n';
  };
  for (const ComparisonReport& report : reports) {
    for (const PolicyRun& run : report.runs) {
      row({report.scenario, std::string(to_string(run.policy)),
           std::string(to_string(run.variant)), display(run.metrics.makespan),
           display(run.metrics.imbalance), packed_loads(run.metrics),
           packed_assignments(report, run.schedule)});
    }
    if (report.optimal)
      row({report.scenario, "optimal", "", display(*report.optimal), "", "", ""});
  }
  return out;
}

Json display_json(const Rational& v) {
  if (v.is_integer()) return v.numerator();
  return std::stod(v.to_display_string());
}

std::string emit_json(std::span<const ComparisonReport> reports) {
  Json arr = Json::array();
  for (const ComparisonReport& report : reports) {
    Json jr;
    jr["scenario"] = report.scenario;
    Json runs = Json::array();
    for (const PolicyRun& run : report.runs) {
      Json jrun;
      jrun["policy"] = std::string(to_string(run.policy));
      jrun["variant"] = std::string(to_string(run.variant));
      jrun["makespan"] = display_json(run.metrics.makespan);
      jrun["imbalance"] = display_json(run.metrics.imbalance);
      Json loads = Json::array();
      for (const Duration& load : run.metrics.loads) loads.push_back(display_json(load));
      jrun["loads"] = std::move(loads);
      Json assignments = Json::array();
      for (const Assignment& a : run.schedule.assignments) {
        Json ja;
        ja["task"] = label(report.task_names, a.task, 'T');
        ja["resource"] = label(report.resource_names, a.resource, 'R');
        ja["start"] = display_json(a.start);
        ja["finish"] = display_json(a.finish);
        assignments.push_back(std::move(ja));
      }
      jrun["assignments"] = std::move(assignments);
      runs.push_back(std::move(jrun));
    }
    jr["runs"] = std::move(runs);
    if (report.optimal) jr["optimal"] = display_json(*report.optimal);
    arr.push_back(std::move(jr));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

std::vector<std::string> Scenario::task_names() const {
  if (const auto* w = std::get_if<WorkloadInput>(&input)) {
    std::vector<std::string> names;
    names.reserve(w->tasks.size());
    for (const TaskSpec& t : w->tasks) names.push_back(t.name);
    return names;
  }
  return std::get<MatrixInput>(input).task_names;
}

std::vector<std::string> Scenario::resource_names() const {
  if (const auto* w = std::get_if<WorkloadInput>(&input)) {
    std::vector<std::string> names;
    names.reserve(w->resources.size());
    for (const ResourceSpec& r : w->resources) names.push_back(r.name);
    return names;
  }
  return std::get<MatrixInput>(input).resource_names;
}

EtcMatrix Scenario::etc_matrix(std::optional<RoundingMode> rounding_override) const {
  if (const auto* w = std::get_if<WorkloadInput>(&input))
    return derive_etc(w->tasks, w->resources, rounding_override.value_or(w->rounding));
  if (rounding_override)
    throw InputError("scenario '" + name +
                     "' carries a literal execution-time grid; a rounding mode only "
                     "applies to workload scenarios");
  return std::get<MatrixInput>(input).etc;
}

Scenario parse_scenario(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("scenario: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("scenario: top level must be a JSON object");
  expect_keys(doc, "scenario", {"name", "workload", "etc"});
  Scenario scenario;
  scenario.name = read_string(require(doc, "scenario", "name"), "scenario.name");
  bool has_workload = doc.contains("workload");
  bool has_matrix = doc.contains("etc");
  if (has_workload == has_matrix)
    throw InputError("scenario: exactly one of \"workload\" or \"etc\" must be present");
  if (has_workload) {
    const Json& jw = require(doc, "scenario", "workload");
    if (!jw.is_object()) fail("scenario.workload", "expected an object");
    expect_keys(jw, "scenario.workload", {"tasks", "resources", "rounding"});
    WorkloadInput w;
    w.tasks = read_tasks(require(jw, "scenario.workload", "tasks"), "scenario.workload.tasks");
    w.resources = read_resources(require(jw, "scenario.workload", "resources"),
                                 "scenario.workload.resources");
    if (auto it = jw.find("rounding"); it != jw.end())
      w.rounding = parse_rounding_mode(read_string(*it, "scenario.workload.rounding"));
    scenario.input = std::move(w);
  } else {
    const Json& jm = require(doc, "scenario", "etc");
    if (!jm.is_object()) fail("scenario.etc", "expected an object");
    scenario.input = read_matrix(jm, "scenario.etc");
  }
  return scenario;
}

std::string emit_scenario(const Scenario& scenario) {
  Json doc;
  doc["name"] = scenario.name;
  if (const auto* w = std::get_if<WorkloadInput>(&scenario.input)) {
    Json tasks = Json::array();
    for (const TaskSpec& t : w->tasks) {
      Json jt;
      jt["id"] = t.name;
      jt["mi"] = rational_json(t.instruction_volume);
      jt["mb"] = rational_json(t.data_volume);
      tasks.push_back(std::move(jt));
    }
    Json resources = Json::array();
    for (const ResourceSpec& r : w->resources) {
      Json jr;
      jr["id"] = r.name;
      jr["mips"] = rational_json(r.processing_speed);
      jr["mbps"] = rational_json(r.bandwidth);
      resources.push_back(std::move(jr));
    }
    Json jw;
    jw["tasks"] = std::move(tasks);
    jw["resources"] = std::move(resources);
    jw["rounding"] = std::string(to_string(w->rounding));
    doc["workload"] = std::move(jw);
  } else {
    const auto& m = std::get<MatrixInput>(scenario.input);
    Json jm;
    jm["tasks"] = m.task_names;
    jm["resources"] = m.resource_names;
    Json rows = Json::array();
    for (TaskId i = 0; i < m.etc.task_count(); ++i) {
      Json row = Json::array();
      for (ResourceId j = 0; j < m.etc.resource_count(); ++j)
        row.push_back(rational_json(m.etc.at(i, j)));
      rows.push_back(std::move(row));
    }
    jm["rows"] = std::move(rows);
    doc["etc"] = std::move(jm);
  }
  return doc.dump(2) + "\n";
}

Scenario generate_workload(const GeneratorSpec& spec) {
  if (spec.tasks == 0 || spec.resources == 0)
    throw InputError("generator needs at least one task and one resource");
  check_range(spec.instruction_volume, "mi");
  check_range(spec.data_volume, "mb");
  check_range(spec.processing_speed, "mips");
  check_range(spec.bandwidth, "mbps");

  std::mt19937_64 rng(spec.seed);
  WorkloadInput w;
  w.tasks.reserve(spec.tasks);
  for (std::size_t i = 0; i < spec.tasks; ++i) {
    TaskSpec t;
    t.name = "T" + std::to_string(i + 1);
    t.instruction_volume = uniform_draw(rng, spec.instruction_volume);
    t.data_volume = uniform_draw(rng, spec.data_volume);
    w.tasks.push_back(std::move(t));
  }
  w.resources.reserve(spec.resources);
  for (std::size_t j = 0; j < spec.resources; ++j) {
    ResourceSpec r;
    r.name = "R" + std::to_string(j + 1);
    r.processing_speed = uniform_draw(rng, spec.processing_speed);
    r.bandwidth = uniform_draw(rng, spec.bandwidth);
    w.resources.push_back(std::move(r));
  }

  Scenario scenario;
  scenario.name = spec.name.empty()
                      ? "gen-" + std::to_string(spec.seed) + "-" +
                            std::to_string(spec.tasks) + "x" + std::to_string(spec.resources)
                      : spec.name;
  scenario.input = std::move(w);
  return scenario;
}

ComparisonReport compare_policies(const Scenario& scenario, const CompareOptions& options) {
  ComparisonReport report;
  report.scenario = scenario.name;
  report.task_names = scenario.task_names();
  report.resource_names = scenario.resource_names();
  EtcMatrix etc = scenario.etc_matrix(options.rounding);
  report.runs.reserve(kAllPolicies.size());
  for (PolicyId policy : kAllPolicies) {
    PolicyRun run;
    run.policy = policy;
    run.variant = options.variant;
    run.schedule = run_policy(policy, etc, options.variant);
    run.metrics = compute_metrics(run.schedule);
    report.runs.push_back(std::move(run));
  }
  if (options.with_oracle)
    report.optimal = optimal_makespan(etc, options.oracle_limit).optimal_makespan;
  return report;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::text;
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw InputError("unknown report format '" + std::string(text) +
                   "' (expected text, csv or json)");
}

std::string emit_report(std::span<const ComparisonReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return emit_text(reports);
    case ReportFormat::csv: return emit_csv(reports);
    case ReportFormat::json: return emit_json(reports);
  }
  return {};
}

std::string render_gantt(const Schedule& schedule,
                         std::span<const std::string> task_names,
                         std::span<const std::string> resource_names, GanttStyle style) {
  return style == GanttStyle::svg ? render_svg(schedule, task_names, resource_names)
                                  : render_ascii(schedule, task_names, resource_names);
}

}  // namespace ramm
