#pragma once

#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

// Lexicographic progress measure for the local search. For the good-moving
// phase: (minimum own value, -number of minimizers, items held by
// minimizers); the chore-moving phase mirrors it with maximizers and the
// negated maximum. Each local-search step strictly increases the triple.
struct PotentialTriple {
    long long x = 0;
    long long y = 0;
    long long z = 0;

    auto operator<=>(const PotentialTriple&) const = default;
};

enum class PotentialKind { GoodMoving, ChoreMoving };

PotentialTriple potential(const Instance& inst, const Allocation& a, PotentialKind kind);

struct LocalSearchStep {
    Item moved = 0;
    Agent from = 0;
    Agent to = 0;
    PotentialTriple potential_after;
};

struct LocalSearchResult {
    Allocation allocation;
    long long iterations = 0;
    std::vector<LocalSearchStep> trace;  // filled only when requested
};

// Equitability up to any good or chore for objective valuations: start from
// everything in agent 1's bundle; if the grand bundle is worth more than
// nothing to agent 1, repeatedly move a good to the current minimizer while
// some donor stays strictly ahead even after giving it up; if worth less,
// mirror with chores toward the current maximizer. Requires every item to be
// globally a good or a chore (additive or subset valuations).
LocalSearchResult local_search_eqxgc(const Instance& inst, bool record_trace = false);

struct GreedyResult {
    Allocation allocation;
};

// Equitability up to one item: hand out goods in ascending item order, each
// to a currently poorest agent, then chores each to a currently richest one.
// Every prefix of the run is EQ1.
GreedyResult greedy_eq1(const Instance& inst);

// Equitability up to any good or chore for additive objective valuations:
// while goods remain the poorest agent takes her most valuable one; while
// chores remain the richest agent takes the most burdensome one.
GreedyResult strongly_greedy_eqxgc(const Instance& inst);

}  // namespace fairdiv
