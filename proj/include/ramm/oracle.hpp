#pragma once

#include <cstdint>
#include <vector>

#include "ramm/core.hpp"

namespace ramm {

/// Ground truth for small instances, found by enumerating every one of the
/// m^n task-to-resource mappings. Sequence order within a resource never
/// changes a makespan (bars are gap-free and all tasks release at 0), so
/// mappings — not permutations — are the search space.
struct OracleResult {
  Duration optimal_makespan;
  /// Lexicographically least optimal mapping: witness[i] is task i's resource.
  std::vector<ResourceId> witness;
  /// Number of enumerated mappings, always m^n.
  std::uint64_t explored = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Exhaustive optimum. Partitions the enumeration across OpenMP threads when
/// available; the result is identical to the serial reference bit for bit.
/// Throws LimitError when m^n exceeds `limit`.
OracleResult optimal_makespan(const EtcMatrix& etc,
                              std::uint64_t limit = kDefaultEnumerationLimit);

/// Single-threaded reference implementation, kept independent of the
/// parallel path for testing and benchmarking.
OracleResult optimal_makespan_serial(const EtcMatrix& etc,
                                     std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace ramm
