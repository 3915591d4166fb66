#pragma once

#include <string>

#include "fairdiv/fairness.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv {

// JSON wire formats. Instances: {"n":…, "m":…, "valuation":{"kind":"additive",
// "values":[[…]]}} with "interval"/"table" (triangular, [agent][s-1][t-s]) and
// "subset"/"tables" (per agent an object keyed by decimal bitmask) variants.
// Allocations: [[items of agent 1],…]. Verdicts: {"notion","holds",
// "violations":[[i,j],…],"witnesses":[{"i","j","X":[…]},…]}. All parsers throw
// ParseError on malformed input; emit/parse round-trips to an equal value.
std::string instance_to_json(const Instance& inst, int indent = -1);
Instance instance_from_json(const std::string& text);

std::string allocation_to_json(const Allocation& a, int indent = -1);
Allocation allocation_from_json(const std::string& text);

std::string verdict_to_json(const FairnessVerdict& verdict, int indent = -1);
FairnessVerdict verdict_from_json(const std::string& text);

}  // namespace fairdiv
