#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramm/scenario.hpp"

// Checks the headline behaviors end to end and prints one verdict line per
// criterion; exits 0 only when every line is a PASS.

namespace {

using namespace ramm;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scenario load_fixture(const char* name) {
  return parse_scenario(slurp(std::string(RAMM_SCENARIO_DIR) + "/" + name));
}

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(RAMM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

bool check_reference_makespans(std::string& detail) {
  struct Expected {
    const char* fixture;
    std::array<long long, 4> makespans;
  };
  const std::vector<Expected> table = {
      {"p1.json", {9, 9, 8, 7}},
      {"p2.json", {11, 11, 13, 10}},
      {"p3.json", {4, 4, 14, 4}},
  };
  auto start = Clock::now();
  for (const Expected& row : table) {
    ComparisonReport report = compare_policies(load_fixture(row.fixture));
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
      if (report.runs[i].metrics.makespan != Duration(row.makespans[i])) {
        detail = std::string(row.fixture) + ": " +
                 std::string(to_string(report.runs[i].policy)) + " gave " +
                 report.runs[i].metrics.makespan.to_display_string() + ", expected " +
                 std::to_string(row.makespans[i]);
        return false;
      }
    }
  }
  long long elapsed = ms_since(start);
  detail = "all 12 reference makespans reproduced in " + std::to_string(elapsed) + " ms";
  return elapsed < 1000;
}

bool check_worked_example_chart(std::string& detail) {
  EtcMatrix etc = load_fixture("p1.json").etc_matrix();
  Schedule schedule = resource_aware_min_min(etc);
  const std::vector<Assignment> expected = {
      {1, 0, Duration(0), Duration(1)},  // T2 on R1
      {0, 1, Duration(0), Duration(6)},  // T1 on R2
      {2, 0, Duration(1), Duration(4)},  // T3 on R1
      {3, 0, Duration(4), Duration(7)},  // T4 on R1
  };
  if (schedule.assignments != expected) {
    detail = "schedule deviates from the worked example";
    return false;
  }
  ScheduleMetrics metrics = compute_metrics(schedule);
  if (metrics.loads != std::vector<Duration>{Duration(7), Duration(6)}) {
    detail = "loads deviate from (7, 6)";
    return false;
  }
  detail = "chart R1: T2[0-1] T3[1-4] T4[4-7]; R2: T1[0-6] with loads (7, 6)";
  return true;
}

bool check_baseline_pileup(std::string& detail) {
  EtcMatrix etc = load_fixture("p1.json").etc_matrix();
  for (Schedule schedule : {min_min(etc), max_min(etc)}) {
    for (const Assignment& a : schedule.assignments) {
      if (a.resource != 0) {
        detail = "a baseline used R2";
        return false;
      }
    }
    if (schedule.makespan != Duration(9)) {
      detail = "baseline makespan " + schedule.makespan.to_display_string() + ", expected 9";
      return false;
    }
    ScheduleMetrics metrics = compute_metrics(schedule);
    if (metrics.loads[1] != Duration(0)) {
      detail = "R2 load is nonzero";
      return false;
    }
  }
  detail = "min-min and max-min both stack all four tasks on R1 (makespan 9, R2 idle)";
  return true;
}

bool check_never_beats_optimum(std::string& detail) {
  auto start = Clock::now();
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> tasks_of(1, 8);
  std::uniform_int_distribution<int> resources_of(1, 3);
  std::uniform_int_distribution<long long> numerator_of(1, 20);
  std::uniform_int_distribution<long long> denominator_of(1, 4);
  const int rounds = 500;
  for (int round = 0; round < rounds; ++round) {
    std::size_t n = static_cast<std::size_t>(tasks_of(rng));
    std::size_t m = static_cast<std::size_t>(resources_of(rng));
    EtcMatrix etc(n, m);
    for (TaskId i = 0; i < n; ++i)
      for (ResourceId j = 0; j < m; ++j)
        etc.at(i, j) = Duration(numerator_of(rng), denominator_of(rng));
    Duration optimal = optimal_makespan(etc).optimal_makespan;
    for (PolicyId policy : kAllPolicies) {
      for (DivertVariant variant : {DivertVariant::reselect, DivertVariant::strict}) {
        Schedule schedule = run_policy(policy, etc, variant);
        if (!validate_schedule(schedule, etc).empty()) {
          detail = std::string(to_string(policy)) + "/" + std::string(to_string(variant)) +
                   " produced an infeasible schedule on round " + std::to_string(round);
          return false;
        }
        if (schedule.makespan < optimal) {
          detail = std::string(to_string(policy)) + " beat the exhaustive optimum on round " +
                   std::to_string(round);
          return false;
        }
      }
    }
  }
  long long elapsed = ms_since(start);
  detail = std::to_string(rounds) +
           " random instances: every policy/variant feasible and never below the optimum (" +
           std::to_string(elapsed) + " ms)";
  return elapsed < 30000;
}

bool check_workload_derivation(std::string& detail) {
  std::vector<TaskSpec> tasks = {
      {"T1", Rational(256), Rational(88)},
      {"T2", Rational(35), Rational(31)},
      {"T3", Rational(327), Rational(96)},
      {"T4", Rational(210), Rational(590)},
  };
  std::vector<ResourceSpec> resources = {
      {"R1", Rational(150), Rational(300)},
      {"R2", Rational(300), Rational(15)},
  };
  EtcMatrix derived = derive_etc(tasks, resources);
  if (derived.at(0, 0) != Duration(2) || derived.at(2, 0) != Duration(5, 2)) {
    detail = "exact derivation gave (" + derived.at(0, 0).to_exact_string() + ", " +
             derived.at(2, 0).to_exact_string() + "), expected (2, 5/2)";
    return false;
  }

  // The third reference grid does not follow from its own workload numbers
  // under any rounding mode; a faithful derivation must disagree with it.
  std::vector<TaskSpec> p3_tasks = {
      {"T1", Rational(88), Rational(20)},
      {"T2", Rational(31), Rational(350)},
      {"T3", Rational(100), Rational(207)},
      {"T4", Rational(50), Rational(21)},
  };
  std::vector<ResourceSpec> p3_resources = {
      {"R1", Rational(300), Rational(300)},
      {"R2", Rational(30), Rational(15)},
  };
  EtcMatrix p3_grid = load_fixture("p3.json").etc_matrix();
  for (RoundingMode mode :
       {RoundingMode::exact, RoundingMode::ceil, RoundingMode::nearest, RoundingMode::floor}) {
    if (derive_etc(p3_tasks, p3_resources, mode) == p3_grid) {
      detail = std::string("derivation under ") + std::string(to_string(mode)) +
               " unexpectedly reproduces the reference grid";
      return false;
    }
  }
  detail = "exact entries 2 and 5/2 reproduced; third grid not derivable under any mode";
  return true;
}

bool check_cli_determinism(std::string& detail) {
  std::string dir(RAMM_SCENARIO_DIR);
  std::string compare_args = "compare " + dir + "/p1.json " + dir + "/p2.json " + dir +
                             "/p3.json " + dir + "/p1-variant.json --with-oracle";
  CliResult compare_a = run_cli(compare_args);
  CliResult compare_b = run_cli(compare_args);
  if (compare_a.status != 0 || compare_b.status != 0) {
    detail = "compare exited nonzero";
    return false;
  }
  if (compare_a.out.empty() || compare_a.out != compare_b.out) {
    detail = "compare output differs between runs";
    return false;
  }

  std::string gen_args = "gen --seed 123 --tasks 6 --resources 3";
  CliResult gen_a = run_cli(gen_args);
  CliResult gen_b = run_cli(gen_args);
  if (gen_a.status != 0 || gen_b.status != 0) {
    detail = "gen exited nonzero";
    return false;
  }
  if (gen_a.out.empty() || gen_a.out != gen_b.out) {
    detail = "gen output differs between runs";
    return false;
  }
  detail = "compare (4 scenarios, with oracle) and gen byte-identical across repeat runs";
  return true;
}

bool check_divert_variants(std::string& detail) {
  EtcMatrix etc = load_fixture("p1.json").etc_matrix();
  Schedule strict = improved_max_min(etc, DivertVariant::strict);
  Schedule reselect = improved_max_min(etc, DivertVariant::reselect);
  if (!validate_schedule(strict, etc).empty() || !validate_schedule(reselect, etc).empty()) {
    detail = "a variant produced an infeasible schedule";
    return false;
  }
  if (strict.makespan != Duration(7) || reselect.makespan != Duration(8)) {
    detail = "makespans (" + strict.makespan.to_display_string() + ", " +
             reselect.makespan.to_display_string() + "), expected (7, 8)";
    return false;
  }
  detail = "improved-max-min makespan 7 under strict vs 8 under reselect, both feasible";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    bool (*check)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, check_reference_makespans},  {2, check_worked_example_chart},
      {3, check_baseline_pileup},      {4, check_never_beats_optimum},
      {5, check_workload_derivation},  {6, check_cli_determinism},
      {7, check_divert_variants},
  };

  bool all_passed = true;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %s - %s\n", criterion.number, ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) all_passed = false;
  }
  return all_passed ? 0 : 1;
}
