#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramm/scenario.hpp"

namespace {

using namespace ramm;

/// Malformed flag values detected after CLI parsing (exit 1, like any other
/// command-line problem).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("cannot read '" + path + "'");
  return buf.str();
}

Scenario load_scenario(const std::string& path) {
  std::string text = slurp(path);
  try {
    return parse_scenario(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) throw InputError("cannot write '" + out_path + "'");
}

std::optional<RoundingMode> rounding_from(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  return parse_rounding_mode(flag);
}

ValueRange parse_range_flag(const std::string& text, const char* flag) {
  auto colon = text.find(':');
  ValueRange range;
  try {
    if (colon == std::string::npos) {
      range.lo = range.hi = std::stoll(text);
      return range;
    }
    std::size_t used = 0;
    range.lo = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing characters");
    std::string hi = text.substr(colon + 1);
    range.hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " expects LO:HI integers, got '" + text + "'");
  }
  return range;
}

std::string run_text(const std::string& name, const PolicyRun& run,
                     const std::vector<std::string>& task_names,
                     const std::vector<std::string>& resource_names) {
  std::string out = "scenario: " + name + "\n";
  out += "policy: " + std::string(to_string(run.policy)) + "\n";
  out += "variant: " + std::string(to_string(run.variant)) + "\n";
  out += render_gantt(run.schedule, task_names, resource_names, GanttStyle::ascii);
  out += "makespan: " + run.metrics.makespan.to_display_string() + "\n";
  out += "loads:";
  for (std::size_t j = 0; j < run.metrics.loads.size(); ++j)
    out += " " + resource_names[j] + "=" + run.metrics.loads[j].to_display_string();
  out += "\nimbalance: " + run.metrics.imbalance.to_display_string() + "\n";
  out += "waiting:";
  for (std::size_t i = 0; i < run.metrics.waiting.size(); ++i)
    out += " " + task_names[i] + "=" + run.metrics.waiting[i].to_display_string();
  out += "\nutilization:";
  for (std::size_t j = 0; j < run.metrics.utilization.size(); ++j)
    out += " " + resource_names[j] + "=" + run.metrics.utilization[j].to_display_string();
  out += "\n";
  return out;
}

struct RunOptions {
  std::string path;
  std::string policy;
  std::string variant = "reselect";
  std::string rounding;
  std::string format = "text";
  std::string output;
};

int do_run(const RunOptions& o) {
  Scenario scenario = load_scenario(o.path);
  EtcMatrix etc = scenario.etc_matrix(rounding_from(o.rounding));
  PolicyRun run;
  run.policy = parse_policy(o.policy);
  run.variant = parse_variant(o.variant);
  run.schedule = run_policy(run.policy, etc, run.variant);
  run.metrics = compute_metrics(run.schedule);
  auto task_names = scenario.task_names();
  auto resource_names = scenario.resource_names();

  std::string text;
  if (o.format == "svg") {
    text = render_gantt(run.schedule, task_names, resource_names, GanttStyle::svg);
  } else if (o.format == "text") {
    text = run_text(scenario.name, run, task_names, resource_names);
  } else {
    ComparisonReport report;
    report.scenario = scenario.name;
    report.task_names = std::move(task_names);
    report.resource_names = std::move(resource_names);
    report.runs.push_back(std::move(run));
    text = emit_report(std::span(&report, 1), parse_report_format(o.format));
  }
  write_output(text, o.output);
  return 0;
}

struct CompareOptionsCli {
  std::vector<std::string> paths;
  std::string variant = "reselect";
  std::string rounding;
  std::string format = "text";
  std::string output;
  bool with_oracle = false;
  std::uint64_t limit = kDefaultEnumerationLimit;
};

int do_compare(const CompareOptionsCli& o) {
  CompareOptions options;
  options.variant = parse_variant(o.variant);
  options.rounding = rounding_from(o.rounding);
  options.with_oracle = o.with_oracle;
  options.oracle_limit = o.limit;
  std::vector<ComparisonReport> reports;
  reports.reserve(o.paths.size());
  for (const std::string& path : o.paths)
    reports.push_back(compare_policies(load_scenario(path), options));
  write_output(emit_report(reports, parse_report_format(o.format)), o.output);
  return 0;
}

struct OracleOptions {
  std::string path;
  std::string rounding;
  std::string output;
  std::uint64_t limit = kDefaultEnumerationLimit;
};

int do_oracle(const OracleOptions& o) {
  Scenario scenario = load_scenario(o.path);
  EtcMatrix etc = scenario.etc_matrix(rounding_from(o.rounding));
  OracleResult result = optimal_makespan(etc, o.limit);
  auto task_names = scenario.task_names();
  auto resource_names = scenario.resource_names();
  std::string text = "scenario: " + scenario.name + "\n";
  text += "optimal makespan: " + result.optimal_makespan.to_display_string() + "\n";
  text += "witness:";
  for (std::size_t i = 0; i < result.witness.size(); ++i)
    text += " " + task_names[i] + "=" + resource_names[result.witness[i]];
  text += "\nexplored: " + std::to_string(result.explored) + "\n";
  write_output(text, o.output);
  return 0;
}

struct GenOptions {
  std::uint64_t seed = 0;
  std::size_t tasks = 4;
  std::size_t resources = 2;
  std::string mi, mb, mips, mbps;
  std::string name;
  std::string output;
};

int do_gen(const GenOptions& o) {
  GeneratorSpec spec;
  spec.seed = o.seed;
  spec.tasks = o.tasks;
  spec.resources = o.resources;
  if (!o.mi.empty()) spec.instruction_volume = parse_range_flag(o.mi, "--mi");
  if (!o.mb.empty()) spec.data_volume = parse_range_flag(o.mb, "--mb");
  if (!o.mips.empty()) spec.processing_speed = parse_range_flag(o.mips, "--mips");
  if (!o.mbps.empty()) spec.bandwidth = parse_range_flag(o.mbps, "--mbps");
  spec.name = o.name;
  write_output(emit_scenario(generate_workload(spec)), o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch scheduling heuristics on execution-time grids: run one policy, "
               "compare all of them, check against the exhaustive optimum, or "
               "generate workloads."};
  app.require_subcommand(1);

  const std::vector<std::string> policies = {"min-min", "max-min", "improved-max-min", "ramm"};
  const std::vector<std::string> variants = {"reselect", "strict"};
  const std::vector<std::string> roundings = {"exact", "ceil", "nearest", "floor"};
  const std::vector<std::string> report_formats = {"text", "csv", "json"};
  const std::vector<std::string> run_formats = {"text", "csv", "json", "svg"};

  RunOptions run_opts;
  CLI::App* cmd_run = app.add_subcommand("run", "Run one policy on a scenario");
  cmd_run->add_option("scenario", run_opts.path, "Scenario JSON file")->required();
  cmd_run->add_option("--policy", run_opts.policy, "Scheduling policy")
      ->required()->check(CLI::IsMember(policies));
  cmd_run->add_option("--variant", run_opts.variant, "Busy-resource handling")
      ->check(CLI::IsMember(variants))->capture_default_str();
  cmd_run->add_option("--rounding", run_opts.rounding,
                      "Override the workload rounding mode")
      ->check(CLI::IsMember(roundings));
  cmd_run->add_option("--format", run_opts.format, "Output format")
      ->check(CLI::IsMember(run_formats))->capture_default_str();
  cmd_run->add_option("-o,--output", run_opts.output, "Write to file instead of stdout");

  CompareOptionsCli cmp_opts;
  CLI::App* cmd_compare =
      app.add_subcommand("compare", "Run every policy on one or more scenarios");
  cmd_compare->add_option("scenarios", cmp_opts.paths, "Scenario JSON files")
      ->required()->expected(-1);
  cmd_compare->add_option("--variant", cmp_opts.variant, "Busy-resource handling")
      ->check(CLI::IsMember(variants))->capture_default_str();
  cmd_compare->add_option("--rounding", cmp_opts.rounding,
                          "Override the workload rounding mode")
      ->check(CLI::IsMember(roundings));
  cmd_compare->add_option("--format", cmp_opts.format, "Output format")
      ->check(CLI::IsMember(report_formats))->capture_default_str();
  cmd_compare->add_flag("--with-oracle", cmp_opts.with_oracle,
                        "Append the exhaustive optimum");
  cmd_compare->add_option("--limit", cmp_opts.limit,
                          "Mapping-count bound for the oracle")
      ->capture_default_str();
  cmd_compare->add_option("-o,--output", cmp_opts.output, "Write to file instead of stdout");

  OracleOptions oracle_opts;
  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "Exhaustively find the optimal makespan");
  cmd_oracle->add_option("scenario", oracle_opts.path, "Scenario JSON file")->required();
  cmd_oracle->add_option("--rounding", oracle_opts.rounding,
                         "Override the workload rounding mode")
      ->check(CLI::IsMember(roundings));
  cmd_oracle->add_option("--limit", oracle_opts.limit, "Mapping-count bound")
      ->capture_default_str();
  cmd_oracle->add_option("-o,--output", oracle_opts.output,
                         "Write to file instead of stdout");

  GenOptions gen_opts;
  CLI::App* cmd_gen =
      app.add_subcommand("gen", "Generate a deterministic random workload scenario");
  cmd_gen->add_option("--seed", gen_opts.seed, "RNG seed")->capture_default_str();
  cmd_gen->add_option("--tasks", gen_opts.tasks, "Number of tasks")->capture_default_str();
  cmd_gen->add_option("--resources", gen_opts.resources, "Number of resources")
      ->capture_default_str();
  cmd_gen->add_option("--mi", gen_opts.mi, "Instruction volume range LO:HI (default 100:1000)");
  cmd_gen->add_option("--mb", gen_opts.mb, "Data volume range LO:HI (default 10:100)");
  cmd_gen->add_option("--mips", gen_opts.mips, "Processing speed range LO:HI (default 10:100)");
  cmd_gen->add_option("--mbps", gen_opts.mbps, "Bandwidth range LO:HI (default 10:100)");
  cmd_gen->add_option("--name", gen_opts.name, "Scenario name (default derived from seed)");
  cmd_gen->add_option("-o,--output", gen_opts.output, "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_run) return do_run(run_opts);
    if (*cmd_compare) return do_compare(cmp_opts);
    if (*cmd_oracle) return do_oracle(oracle_opts);
    if (*cmd_gen) return do_gen(gen_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
