#pragma once

#include <array>
#include <string_view>

#include "ramm/core.hpp"

namespace ramm {

enum class PolicyId { min_min, max_min, improved_max_min, ramm };

/// Report/column order for comparisons.
inline constexpr std::array<PolicyId, 4> kAllPolicies = {
    PolicyId::min_min, PolicyId::max_min, PolicyId::improved_max_min, PolicyId::ramm};

/// What RAMM and Improved Max-Min do when the chosen task's best resource is
/// already busy and an idle resource exists:
///  - reselect: the idle resource is filled with the task it suits best
///    (minimum completion time there for RAMM, maximum execution time for
///    Improved Max-Min); the originally chosen task stays in the pool.
///  - strict: the originally chosen task itself moves to the best idle
///    resource (RAMM) or is placed on its minimum-completion-time resource
///    unconditionally (Improved Max-Min).
enum class DivertVariant { reselect, strict };

PolicyId parse_policy(std::string_view text);            // throws InputError
DivertVariant parse_variant(std::string_view text);      // throws InputError
std::string_view to_string(PolicyId policy);
std::string_view to_string(DivertVariant variant);

/// Repeatedly assigns the (task, resource) pair with the smallest completion
/// time, ties by task then resource index.
Schedule min_min(const EtcMatrix& etc);

/// Repeatedly picks the task holding the largest completion time anywhere in
/// the grid and places it on its fastest (minimum execution time) resource.
Schedule max_min(const EtcMatrix& etc);

/// Repeatedly picks the task with the largest execution time anywhere and
/// places it on its minimum-completion-time resource, diverting per variant
/// when that resource is busy and an idle one exists.
Schedule improved_max_min(const EtcMatrix& etc,
                          DivertVariant variant = DivertVariant::reselect);

/// Resource-aware min-min: repeatedly picks the task with the smallest
/// execution time anywhere and places it on its minimum-completion-time
/// resource; when that resource is busy and an idle one exists, the idle
/// resource is used instead (per variant). With every resource busy, the
/// globally minimum-completion-time resource wins.
Schedule resource_aware_min_min(const EtcMatrix& etc,
                                DivertVariant variant = DivertVariant::reselect);

Schedule run_policy(PolicyId policy, const EtcMatrix& etc,
                    DivertVariant variant = DivertVariant::reselect);

}  // namespace ramm
