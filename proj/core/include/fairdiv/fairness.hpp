#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

// Envy notions compare v_i(A_i) with v_i(A_j); equity notions compare
// v_i(A_i) with v_j(A_j). The *_BorderPair variants restrict removals to
// border items of connected bundles; *_OwnBorderChore allows dropping one
// border item from the poorer agent's own bundle only.
enum class FairnessNotion {
    EF,
    EFX,
    EF1,
    EF1GoodChore,        // one removal from each side, any items
    EF1BorderPair,       // one border item from each side (connected only)
    EF1OwnBorderChore,   // one border item from own bundle (connected only)
    EQ,
    EQX,
    EQXGoodChore,
    EQ1,
    EQ1GoodChore,
    EQ1BorderPair,
    EQ1OwnBorderChore,
};

bool is_envy_notion(FairnessNotion notion);
bool is_equity_notion(FairnessNotion notion);
std::string notion_name(FairnessNotion notion);          // kebab-case, e.g. "eq1p-gc"
FairnessNotion notion_from_name(const std::string& name);

struct RemovalWitness {
    Agent i = 0;
    Agent j = 0;
    std::vector<Item> removed;  // the set X that restores the inequality
};

struct FairnessVerdict {
    FairnessNotion notion;
    bool holds = true;
    std::vector<std::pair<Agent, Agent>> violations;  // ordered (i, j) pairs
    std::vector<RemovalWitness> witnesses;            // for pairs fixed by a removal
};

// Check one allocation against one notion. Partial allocations are accepted
// (bundles must be disjoint and in range); none of the definitions need
// coverage. Raises NotConnected for border-based notions on disconnected
// allocations and propagates UnsupportedQuery from the valuation.
FairnessVerdict check_envy(const Instance& inst, const Allocation& a, FairnessNotion notion);
FairnessVerdict check_equity(const Instance& inst, const Allocation& a, FairnessNotion notion);
FairnessVerdict check(const Instance& inst, const Allocation& a, FairnessNotion notion);

}  // namespace fairdiv
