#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/errors.hpp"

namespace fairdiv {

// Items are 1..m, agents 1..n throughout. Item ids double as positions on the
// path 1 - 2 - ... - m.
using Item = int;
using Agent = int;

// Contiguous run of items s..t. Empty iff t < s; the default is the canonical
// empty interval. Cut-point helpers use the half-open convention: a cut p sits
// between items p and p+1, so cuts p <= q delimit items p+1..q.
struct Interval {
    int s = 1;
    int t = 0;

    bool empty() const { return t < s; }
    int size() const { return empty() ? 0 : t - s + 1; }
    bool contains(Item x) const { return !empty() && s <= x && x <= t; }
    bool operator==(const Interval&) const = default;
};

// Items between cut points p and q: {p+1..q} when q > p, empty otherwise.
Interval interval_items(int p, int q);

// A bundle is a set of items; connected bundles are the intervals. Items are
// kept sorted. Most code paths hand around either genuine intervals or small
// explicit sets, so connectivity is computed once at construction.
class Bundle {
  public:
    Bundle() = default;
    explicit Bundle(Interval iv);
    explicit Bundle(std::vector<Item> items);  // sorted or not; deduplicated

    static Bundle interval(int s, int t) { return Bundle(Interval{s, t}); }

    bool empty() const { return items_.empty(); }
    int size() const { return static_cast<int>(items_.size()); }
    bool connected() const { return connected_; }
    bool contains(Item x) const;

    // Only valid for connected bundles (the empty bundle maps to the empty
    // interval).
    Interval as_interval() const;

    // Border items of a connected bundle: {s, t}, collapsed for singletons.
    std::vector<Item> border() const;

    const std::vector<Item>& items() const { return items_; }
    std::uint32_t mask() const;  // bit x-1 set for item x; items must be <= 32
    Bundle without(Item x) const;

    bool operator==(const Bundle&) const = default;

  private:
    std::vector<Item> items_;
    bool connected_ = true;
};

struct Allocation {
    std::vector<Bundle> bundles;  // bundles[i-1] belongs to agent i

    int agents() const { return static_cast<int>(bundles.size()); }
    const Bundle& of(Agent i) const { return bundles[static_cast<size_t>(i) - 1]; }
    bool connected() const;
};

enum class ValuationKind { Additive, IntervalTable, SubsetTable };

// Integer-valued valuation profile for n agents over m items, in one of three
// representations:
//  - Additive: per-agent item values, any bundle evaluable.
//  - IntervalTable: v[i][s][t] for connected bundles only; disconnected
//    queries raise UnsupportedQuery.
//  - SubsetTable: per-agent value for every subset (m <= 20), v(empty) = 0.
class Valuation {
  public:
    static Valuation additive(std::vector<std::vector<long long>> item_values);
    // table[i][s-1][t-s] = v_i(items s..t), triangular per agent.
    static Valuation interval_table(std::vector<std::vector<std::vector<long long>>> table);
    // tables[i][mask] = v_i(bundle with that item mask); tables[i][0] must be 0.
    static Valuation subset_table(std::vector<std::vector<long long>> tables);

    ValuationKind kind() const { return kind_; }
    int agents() const { return n_; }
    int items() const { return m_; }

    long long value(Agent i, const Bundle& b) const;
    long long value(Agent i, const Interval& iv) const;
    long long value_item(Agent i, Item x) const;  // v_i({x}); singletons are connected, all kinds answer

    const std::vector<std::vector<long long>>& additive_values() const;

  private:
    Valuation() = default;

    ValuationKind kind_ = ValuationKind::Additive;
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<long long>> additive_;        // [agent][item-1]
    std::vector<std::vector<long long>> prefix_;          // additive prefix sums
    std::vector<std::vector<std::vector<long long>>> interval_;  // [agent][s-1][t-s]
    std::vector<std::vector<long long>> subset_;          // [agent][mask]
};

struct Instance {
    int n = 0;
    int m = 0;
    Valuation valuation;

    long long value(Agent i, const Bundle& b) const { return valuation.value(i, b); }
    long long value(Agent i, const Interval& iv) const { return valuation.value(i, iv); }
};

// Extremes of v_i over the interval and its two one-border-item removals.
// v(empty) contributes 0; the empty interval yields (0, 0).
long long v_plus(const Instance& inst, Agent i, const Interval& iv);
long long v_minus(const Instance& inst, Agent i, const Interval& iv);

// x is a good for i with respect to S (x in S) iff dropping it does not raise
// the value; a chore iff dropping it does not lower it. Dummy items are both.
bool is_good_in(const Instance& inst, Agent i, const Bundle& s, Item x);
bool is_chore_in(const Instance& inst, Agent i, const Bundle& s, Item x);

struct ObjectivePartition {
    std::vector<Item> goods;   // items that never lower any agent's bundle value
    std::vector<Item> chores;  // items that never raise one; dummies land in goods
};

struct ValuationClass {
    bool non_negative = false;
    bool non_positive = false;
    bool additive = false;
    bool monotone_non_decreasing = false;
    bool monotone_non_increasing = false;
    // Present iff every item is globally a good or globally a chore; never
    // populated for interval tables (membership is undecidable there).
    std::optional<ObjectivePartition> objective;
};

ValuationClass classify(const Instance& inst);

// Objective partition or a reason why there is none. Raises UnsupportedQuery
// for interval tables, WrongValuationClass when some item is neither.
ObjectivePartition objective_partition(const Instance& inst);

// Validation helpers shared by solvers and checkers.
void require_allocation_shape(const Instance& inst, const Allocation& a);  // disjoint, in range
bool allocation_complete(const Instance& inst, const Allocation& a);       // covers 1..m

}  // namespace fairdiv
