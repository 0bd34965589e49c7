#include "ramm/oracle.hpp"

#include <limits>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramm {
namespace {

using Wide = __int128;

constexpr long long kMaxLL = std::numeric_limits<long long>::max();

Wide gcd_wide(Wide a, Wide b) {
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long checked_ll(Wide v) {
  if (v > Wide(kMaxLL)) throw std::overflow_error("oracle rescaling overflows");
  return static_cast<long long>(v);
}

// The inner loop runs on integers: each column j is rescaled onto a common
// per-column denominator, so a resource's load is a plain int64 sum and a
// mapping's makespan is max_j loads[j] / denom[j]. Loads only ever sum
// entries of their own column, which keeps the scale factors column-local.
struct ScaledGrid {
  std::size_t tasks;
  std::size_t resources;
  std::vector<long long> scaled;  // row-major, scaled[i * resources + j] >= 0
  std::vector<long long> denom;   // per column, > 0

  explicit ScaledGrid(const EtcMatrix& etc)
      : tasks(etc.task_count()),
        resources(etc.resource_count()),
        scaled(tasks * resources),
        denom(resources) {
    for (ResourceId j = 0; j < resources; ++j) {
      Wide lcm = 1;
      for (TaskId i = 0; i < tasks; ++i) {
        Wide d = etc.at(i, j).denominator();
        lcm = lcm / gcd_wide(lcm, d) * d;
        checked_ll(lcm);
      }
      denom[j] = static_cast<long long>(lcm);
      Wide column_total = 0;
      for (TaskId i = 0; i < tasks; ++i) {
        const Duration& v = etc.at(i, j);
        Wide s = Wide(v.numerator()) * (denom[j] / v.denominator());
        scaled[i * resources + j] = checked_ll(s);
        column_total += s;
      }
      // Any subset of a column sums to at most the full column.
      checked_ll(column_total);
    }
  }
};

// Compare a/b vs c/d, denominators positive.
int compare_fractions(long long a, long long b, long long c, long long d) {
  Wide left = Wide(a) * d;
  Wide right = Wide(c) * b;
  if (left < right) return -1;
  if (left > right) return 1;
  return 0;
}

std::uint64_t mapping_count(std::size_t tasks, std::size_t resources,
                            std::uint64_t limit) {
  auto too_large = [&]() -> LimitError {
    return LimitError("instance too large: " + std::to_string(resources) + "^" +
                      std::to_string(tasks) + " mappings exceed limit " +
                      std::to_string(limit));
  };
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < tasks; ++i) {
    if (total > limit / resources) throw too_large();
    total *= resources;
  }
  if (total > limit) throw too_large();
  return total;
}

// Mapping index -> assignment vector, task 0 in the most significant digit,
// so ascending index order is lexicographic order on witnesses.
std::vector<ResourceId> decode_mapping(std::uint64_t index, std::size_t tasks,
                                       std::size_t resources) {
  std::vector<ResourceId> mapping(tasks);
  for (std::size_t i = tasks; i-- > 0;) {
    mapping[i] = static_cast<ResourceId>(index % resources);
    index /= resources;
  }
  return mapping;
}

struct Candidate {
  long long num = 0;
  long long den = 1;
  std::uint64_t index = 0;
  bool set = false;

  // Strict total order: smaller makespan, then smaller mapping index. The
  // merge result is independent of offer order, which is what makes the
  // parallel reduction bit-identical to the serial scan.
  void offer(long long n, long long d, std::uint64_t k) {
    if (set) {
      int cmp = compare_fractions(n, d, num, den);
      if (cmp > 0 || (cmp == 0 && k >= index)) return;
    }
    num = n;
    den = d;
    index = k;
    set = true;
  }

  void merge(const Candidate& other) {
    if (other.set) offer(other.num, other.den, other.index);
  }
};

// Makespan of one mapping as a fraction over the scaled grid.
void evaluate_mapping(const ScaledGrid& grid, std::uint64_t index,
                      std::vector<long long>& loads, long long& num, long long& den) {
  loads.assign(grid.resources, 0);
  std::uint64_t rest = index;
  for (std::size_t i = grid.tasks; i-- > 0;) {
    auto r = static_cast<std::size_t>(rest % grid.resources);
    rest /= grid.resources;
    loads[r] += grid.scaled[i * grid.resources + r];
  }
  num = loads[0];
  den = grid.denom[0];
  for (std::size_t j = 1; j < grid.resources; ++j) {
    if (compare_fractions(loads[j], grid.denom[j], num, den) > 0) {
      num = loads[j];
      den = grid.denom[j];
    }
  }
}

OracleResult result_from(const ScaledGrid& grid, const Candidate& best,
                         std::uint64_t total) {
  OracleResult result;
  result.optimal_makespan = Duration(best.num, best.den);
  result.witness = decode_mapping(best.index, grid.tasks, grid.resources);
  result.explored = total;
  return result;
}

}  // namespace

OracleResult optimal_makespan_serial(const EtcMatrix& etc, std::uint64_t limit) {
  const std::uint64_t total =
      mapping_count(etc.task_count(), etc.resource_count(), limit);
  ScaledGrid grid(etc);
  Candidate best;
  std::vector<long long> loads(grid.resources);
  for (std::uint64_t k = 0; k < total; ++k) {
    long long num = 0;
    long long den = 1;
    evaluate_mapping(grid, k, loads, num, den);
    best.offer(num, den, k);
  }
  return result_from(grid, best, total);
}

OracleResult optimal_makespan(const EtcMatrix& etc, std::uint64_t limit) {
  const std::uint64_t total =
      mapping_count(etc.task_count(), etc.resource_count(), limit);
  ScaledGrid grid(etc);
  Candidate best;
#ifdef _OPENMP
  #pragma omp parallel
  {
    Candidate local;
    std::vector<long long> loads(grid.resources);
    #pragma omp for schedule(static) nowait
    for (long long k = 0; k < static_cast<long long>(total); ++k) {
      long long num = 0;
      long long den = 1;
      evaluate_mapping(grid, static_cast<std::uint64_t>(k), loads, num, den);
      local.offer(num, den, static_cast<std::uint64_t>(k));
    }
    #pragma omp critical(ramm_oracle_merge)
    best.merge(local);
  }
#else
  std::vector<long long> loads(grid.resources);
  for (std::uint64_t k = 0; k < total; ++k) {
    long long num = 0;
    long long den = 1;
    evaluate_mapping(grid, k, loads, num, den);
    best.offer(num, den, k);
  }
#endif
  return result_from(grid, best, total);
}

}  // namespace ramm
