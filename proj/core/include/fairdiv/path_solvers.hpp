#pragma once

#include <optional>
#include <vector>

#include "fairdiv/fairness.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/rounding.hpp"
#include "fairdiv/triangulation.hpp"

namespace fairdiv {

// Default ceiling on the number of elementary simplices a Sperner search may
// visit; overridable per call and via FAIRDIV_SCALE_BUDGET in the CLI.
inline constexpr long long kDefaultScaleBudget = 4'000'000;

struct DpResult {
    Allocation allocation;
    long long c = 0;          // the first feasible target value
    int candidates_tried = 0; // ascending positions scanned in the value set
};

// Connected EQ1P-gc allocation by feasibility search over candidate common
// values: c is feasible when the path splits into n intervals, ordered by
// rho, with v_plus >= c >= v_minus for every agent on her own interval. The
// candidate set is {0} plus every interval value of every agent, scanned in
// ascending order; the first feasible c is kept. Requires a non-negative or
// non-positive valuation; rho defaults to 1..n (bundle k, left to right, goes
// to agent rho(k)).
DpResult solve_eq1p_gc_dp(const Instance& inst, const std::vector<Agent>& rho = {});

struct SpernerSolveResult {
    Allocation allocation;
    long long simplices_scanned = 0;
};

// Connected EQ1P-gc via the triangulation: equity coloring for non-negative
// valuations, equity multi-coloring for non-positive ones; the first
// fully-colored cell's base vertex is rounded and bundle j goes to agent j.
SpernerSolveResult solve_eq1p_gc_sperner(const Instance& inst,
                                         long long scale_budget = kDefaultScaleBudget);

// Connected EF1P-gc via the joint search over the n per-agent envy colorings
// (multi-colorings when non-positive); agent i receives rounded bundle
// tau(i).
SpernerSolveResult solve_ef1p_gc_sperner(const Instance& inst,
                                         long long scale_budget = kDefaultScaleBudget);

}  // namespace fairdiv
