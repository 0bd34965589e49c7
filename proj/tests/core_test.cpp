#include <stdexcept>

#include "doctest.h"
#include "ramm/core.hpp"

using namespace ramm;

namespace {

EtcMatrix grid(std::size_t n, std::size_t m, std::vector<long long> values) {
  std::vector<Duration> entries(values.begin(), values.end());
  return EtcMatrix(n, m, std::move(entries));
}

// The 4x2 worked-example grid.
EtcMatrix p1() { return grid(4, 2, {2, 6, 1, 2, 3, 8, 3, 40}); }

bool has_kind(const std::vector<Diagnostic>& diags, DiagnosticKind kind) {
  for (const Diagnostic& d : diags)
    if (d.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("matrix construction validates shape and sign") {
  CHECK_THROWS_AS(EtcMatrix(0, 2), InputError);
  CHECK_THROWS_AS(EtcMatrix(2, 0), InputError);
  CHECK_THROWS_AS(grid(2, 2, {1, 2, 3}), InputError);
  CHECK_THROWS_AS(grid(1, 2, {1, -2}), InputError);

  EtcMatrix etc = p1();
  CHECK(etc.task_count() == 4);
  CHECK(etc.resource_count() == 2);
  CHECK(etc.at(3, 1) == Duration(40));
  CHECK_THROWS_AS(etc.at(4, 0), std::out_of_range);
  CHECK_THROWS_AS(etc.at(0, 2), std::out_of_range);
}

TEST_CASE("build_schedule lays bars back to back per resource") {
  // The order the resource-aware policy produces on sample 1.
  Schedule s = build_schedule({{1, 0}, {0, 1}, {2, 0}, {3, 0}}, p1());
  REQUIRE(s.assignments.size() == 4);
  CHECK(s.assignments[0] == Assignment{1, 0, Duration(0), Duration(1)});
  CHECK(s.assignments[1] == Assignment{0, 1, Duration(0), Duration(6)});
  CHECK(s.assignments[2] == Assignment{2, 0, Duration(1), Duration(4)});
  CHECK(s.assignments[3] == Assignment{3, 0, Duration(4), Duration(7)});
  CHECK(s.makespan == Duration(7));
  CHECK(s.resource_count == 2);
  CHECK(validate_schedule(s, p1()).empty());
}

TEST_CASE("build_schedule rejects malformed orders") {
  CHECK_THROWS_AS(build_schedule({{0, 0}, {0, 1}, {1, 0}, {2, 0}}, p1()), InputError);
  CHECK_THROWS_AS(build_schedule({{0, 0}, {1, 0}}, p1()), InputError);
  CHECK_THROWS_AS(build_schedule({{0, 0}, {1, 0}, {2, 0}, {9, 0}}, p1()),
                  std::out_of_range);
  CHECK_THROWS_AS(build_schedule({{0, 0}, {1, 0}, {2, 0}, {3, 7}}, p1()),
                  std::out_of_range);
}

TEST_CASE("validator flags each way a schedule can be corrupted") {
  EtcMatrix etc = p1();
  Schedule good = build_schedule({{1, 0}, {0, 1}, {2, 0}, {3, 0}}, etc);
  REQUIRE(validate_schedule(good, etc).empty());

  SUBCASE("wrong cached makespan") {
    Schedule s = good;
    s.makespan = Duration(8);
    CHECK(has_kind(validate_schedule(s, etc), DiagnosticKind::wrong_makespan));
  }
  SUBCASE("bar length disagrees with the grid") {
    Schedule s = good;
    s.assignments[2].finish = Duration(5);
    CHECK(has_kind(validate_schedule(s, etc), DiagnosticKind::wrong_duration));
  }
  SUBCASE("gap between bars") {
    Schedule s = good;
    s.assignments[2].start = Duration(2);
    s.assignments[2].finish = Duration(5);
    auto diags = validate_schedule(s, etc);
    CHECK(has_kind(diags, DiagnosticKind::gap));
  }
  SUBCASE("overlapping bars") {
    Schedule s = good;
    s.assignments[3].start = Duration(3);
    s.assignments[3].finish = Duration(6);
    auto diags = validate_schedule(s, etc);
    CHECK(has_kind(diags, DiagnosticKind::overlap));
  }
  SUBCASE("negative start") {
    Schedule s = good;
    s.assignments[1].start = Duration(-6);
    s.assignments[1].finish = Duration(0);
    CHECK(has_kind(validate_schedule(s, etc), DiagnosticKind::negative_start));
  }
  SUBCASE("duplicate and missing tasks") {
    Schedule s = good;
    s.assignments[1].task = 1;  // task 0 gone, task 1 twice
    auto diags = validate_schedule(s, etc);
    CHECK(has_kind(diags, DiagnosticKind::duplicate_task));
    CHECK(has_kind(diags, DiagnosticKind::missing_task));
  }
  SUBCASE("ids out of range") {
    Schedule s = good;
    s.assignments[0].task = 11;
    CHECK(has_kind(validate_schedule(s, etc), DiagnosticKind::task_out_of_range));
    Schedule t = good;
    t.assignments[0].resource = 5;
    CHECK(has_kind(validate_schedule(t, etc), DiagnosticKind::resource_out_of_range));
  }
  SUBCASE("resource count disagrees with the grid") {
    Schedule s = good;
    s.resource_count = 3;
    CHECK(has_kind(validate_schedule(s, etc), DiagnosticKind::resource_count_mismatch));
  }
}

TEST_CASE("diagnostic kinds render as text") {
  CHECK(std::string(to_string(DiagnosticKind::gap)) == "gap");
  CHECK(std::string(to_string(DiagnosticKind::wrong_makespan)) == "wrong-makespan");
}

TEST_CASE("initial ready times are all zero") {
  ReadyTimes ready = initial_ready_times(3);
  REQUIRE(ready.size() == 3);
  for (const Duration& r : ready) CHECK(r == Duration(0));
}
