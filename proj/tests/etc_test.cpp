#include "doctest.h"
#include "ramm/etc.hpp"

using namespace ramm;

namespace {

// Sample-1 workload: four tasks with instruction/data volumes and two
// machines with speed/bandwidth.
std::vector<TaskSpec> sample1_tasks() {
  return {{"T1", 256, 88}, {"T2", 35, 31}, {"T3", 327, 96}, {"T4", 210, 590}};
}

std::vector<ResourceSpec> sample1_resources() {
  return {{"R1", 150, 300}, {"R2", 300, 15}};
}

std::vector<TaskSpec> sample2_tasks() {
  return {{"T1", 128, 44}, {"T2", 69, 62}, {"T3", 218, 94}, {"T4", 21, 59}};
}

std::vector<ResourceSpec> sample2_resources() {
  return {{"R1", 50, 100}, {"R2", 100, 5}};
}

}  // namespace

TEST_CASE("rounding mode names parse and print") {
  CHECK(parse_rounding_mode("exact") == RoundingMode::exact);
  CHECK(parse_rounding_mode("ceil") == RoundingMode::ceil);
  CHECK(parse_rounding_mode("nearest") == RoundingMode::nearest);
  CHECK(parse_rounding_mode("floor") == RoundingMode::floor);
  CHECK_THROWS_AS(parse_rounding_mode("round"), InputError);
  CHECK(to_string(RoundingMode::nearest) == "nearest");
}

TEST_CASE("exact derivation applies volume/speed + data/bandwidth per entry") {
  EtcMatrix etc = derive_etc(sample1_tasks(), sample1_resources());
  CHECK(etc.at(0, 0) == Duration(2));        // 256/150 + 88/300
  CHECK(etc.at(2, 0) == Duration(5, 2));     // 327/150 + 96/300
  CHECK(etc.at(1, 0) == Duration(101, 300)); // 35/150 + 31/300
  CHECK(etc.at(3, 0) == Duration(101, 30));  // 210/150 + 590/300
  CHECK(etc.at(0, 1) == Duration(168, 25));  // 256/300 + 88/15
  CHECK(etc.at(3, 1) == Duration(1201, 30)); // 210/300 + 590/15
}

TEST_CASE("integer modes round each derived entry") {
  auto tasks = sample1_tasks();
  auto resources = sample1_resources();
  EtcMatrix up = derive_etc(tasks, resources, RoundingMode::ceil);
  EtcMatrix near = derive_etc(tasks, resources, RoundingMode::nearest);
  EtcMatrix down = derive_etc(tasks, resources, RoundingMode::floor);

  // 101/300 ~ 0.337
  CHECK(up.at(1, 0) == Duration(1));
  CHECK(near.at(1, 0) == Duration(0));
  CHECK(down.at(1, 0) == Duration(0));
  // 5/2 rounds away from zero
  CHECK(near.at(2, 0) == Duration(3));
  CHECK(down.at(2, 0) == Duration(2));
  // exact integers survive every mode
  CHECK(up.at(0, 0) == Duration(2));
  CHECK(near.at(0, 0) == Duration(2));
  CHECK(down.at(0, 0) == Duration(2));
}

TEST_CASE("sample-2 grid is exactly the nearest-rounded derivation") {
  EtcMatrix derived = derive_etc(sample2_tasks(), sample2_resources(), RoundingMode::nearest);
  EtcMatrix expected(4, 2, {Duration(3), Duration(10), Duration(2), Duration(13),
                            Duration(5), Duration(21), Duration(1), Duration(12)});
  CHECK(derived == expected);
}

TEST_CASE("derivation validates its inputs") {
  auto tasks = sample1_tasks();
  auto resources = sample1_resources();
  CHECK_THROWS_AS(derive_etc({}, resources), InputError);
  CHECK_THROWS_AS(derive_etc(tasks, {}), InputError);

  auto bad_speed = resources;
  bad_speed[0].processing_speed = 0;
  CHECK_THROWS_AS(derive_etc(tasks, bad_speed), InputError);

  auto bad_bandwidth = resources;
  bad_bandwidth[1].bandwidth = -5;
  CHECK_THROWS_AS(derive_etc(tasks, bad_bandwidth), InputError);

  auto bad_volume = tasks;
  bad_volume[2].instruction_volume = -1;
  CHECK_THROWS_AS(derive_etc(bad_volume, resources), InputError);
}

TEST_CASE("completion time adds the resource's ready time") {
  EtcMatrix etc(2, 2, {Duration(2), Duration(6), Duration(1), Duration(2)});
  ReadyTimes ready = {Duration(3), Duration(0)};
  CHECK(completion_time(etc, ready, 0, 0) == Duration(5));
  CHECK(completion_time(etc, ready, 0, 1) == Duration(6));
  CHECK(completion_time(etc, ready, 1, 0) == Duration(4));

  ReadyTimes short_ready = {Duration(3)};
  CHECK_THROWS_AS(completion_time(etc, short_ready, 0, 1), std::out_of_range);

  auto all = completion_matrix(etc, ready);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == Duration(5));
  CHECK(all[1] == Duration(6));
  CHECK(all[2] == Duration(4));
  CHECK(all[3] == Duration(2));
}
