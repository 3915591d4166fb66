#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fairdiv/fairness.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv {

// Exhaustive ground truth at desk scale. WellOrderedConnected walks the cut
// tuples 0 <= r_1 <= ... <= r_{n-1} <= m (bundle j to agent j); Connected
// walks every distinct allocation into nonempty intervals handed to distinct
// agents, empties elsewhere; All walks every assignment of items to agents.
enum class EnumerationScope { WellOrderedConnected, Connected, All };

std::string scope_name(EnumerationScope scope);
std::optional<EnumerationScope> scope_from_name(const std::string& name);

inline constexpr long long kDefaultAllocationBudget = 2'000'000;

// Upper bound on the scope size: C(m+n-1, n-1) for WellOrderedConnected, that
// times n! for Connected (the walk itself skips duplicate all-empty labelings,
// so it visits no more than this), n^m for All. Saturates instead of
// overflowing.
long long scope_size_bound(int n, int m, EnumerationScope scope);

// Visits each allocation in the scope exactly once, deterministic order; the
// visitor returns false to stop early. Returns the number visited. Throws
// BudgetExceeded when scope_size_bound is over budget, before visiting
// anything.
long long enumerate_allocations(int n, int m, EnumerationScope scope,
                                const std::function<bool(const Allocation&)>& visit,
                                long long budget = kDefaultAllocationBudget);

struct OracleResult {
    bool exists = false;
    std::optional<Allocation> witness;  // first one in enumeration order
    long long examined = 0;
};

OracleResult exists_satisfying(const Instance& inst, FairnessNotion notion,
                               EnumerationScope scope,
                               long long budget = kDefaultAllocationBudget);

}  // namespace fairdiv
