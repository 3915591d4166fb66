#pragma once

#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/triangulation.hpp"

namespace fairdiv {

// Rounds the fractional allocation at a cell's base vertex to whole items,
// processed right to left (bundle n down to 1). Each bundle's cut pair is
// picked from the floor/ceiling of its fractional knives by a nine-way case
// split on the two fractional parts; ambiguous cases consult whether the
// ceiling item was already handed out, or which of the bundle's knives moves
// first along the cell walk. Returns the n bundles in path order.
std::vector<Interval> round_main_allocation(const Triangulation& t, const ElementarySimplex& s);

// Checks the rounding guarantee: for every vertex x of the cell, every agent
// i and bundle j, the virtual value of fractional bundle j at x lies between
// v_minus and v_plus of the rounded bundle j.
bool verify_sandwich(const Instance& inst, const Triangulation& t, const ElementarySimplex& s,
                     const std::vector<Interval>& rounded);

}  // namespace fairdiv
