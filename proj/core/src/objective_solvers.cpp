#include "fairdiv/objective_solvers.hpp"

#include <algorithm>
#include <cstddef>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

ObjectivePartition require_objective(const Instance& inst) {
    if (inst.valuation.kind() == ValuationKind::IntervalTable) {
        throw WrongValuationClass(
            "objective solvers need a global good/chore split; interval tables do not expose one");
    }
    return objective_partition(inst);
}

long long value_of(const Instance& inst, Agent i, const std::vector<Item>& items) {
    return inst.valuation.value(i, Bundle(items));
}

// Lowest index wins ties in both directions.
Agent poorest(const std::vector<long long>& val, int n) {
    Agent best = 1;
    for (Agent k = 2; k <= n; ++k) {
        if (val[static_cast<size_t>(k)] < val[static_cast<size_t>(best)]) best = k;
    }
    return best;
}

Agent richest(const std::vector<long long>& val, int n) {
    Agent best = 1;
    for (Agent k = 2; k <= n; ++k) {
        if (val[static_cast<size_t>(k)] > val[static_cast<size_t>(best)]) best = k;
    }
    return best;
}

Allocation to_allocation(const std::vector<std::vector<Item>>& owned, int n) {
    Allocation a;
    a.bundles.reserve(static_cast<size_t>(n));
    for (Agent k = 1; k <= n; ++k) a.bundles.emplace_back(owned[static_cast<size_t>(k)]);
    return a;
}

void erase_item(std::vector<Item>& items, Item x) {
    items.erase(std::find(items.begin(), items.end(), x));
}

void insert_item(std::vector<Item>& items, Item x) {
    items.insert(std::lower_bound(items.begin(), items.end(), x), x);
}

}  // namespace

PotentialTriple potential(const Instance& inst, const Allocation& a, PotentialKind kind) {
    std::vector<long long> val(static_cast<size_t>(a.agents()) + 1);
    for (Agent k = 1; k <= a.agents(); ++k) val[static_cast<size_t>(k)] = inst.value(k, a.of(k));

    long long pivot = val[1];
    for (Agent k = 2; k <= a.agents(); ++k) {
        if (kind == PotentialKind::GoodMoving)
            pivot = std::min(pivot, val[static_cast<size_t>(k)]);
        else
            pivot = std::max(pivot, val[static_cast<size_t>(k)]);
    }

    PotentialTriple t;
    t.x = kind == PotentialKind::GoodMoving ? pivot : -pivot;
    for (Agent k = 1; k <= a.agents(); ++k) {
        if (val[static_cast<size_t>(k)] != pivot) continue;
        t.y -= 1;
        t.z += a.of(k).size();
    }
    return t;
}

LocalSearchResult local_search_eqxgc(const Instance& inst, bool record_trace) {
    ObjectivePartition part = require_objective(inst);
    const int n = inst.n;
    const int m = inst.m;

    std::vector<char> is_good(static_cast<size_t>(m) + 1, 0);
    for (Item g : part.goods) is_good[static_cast<size_t>(g)] = 1;

    std::vector<std::vector<Item>> owned(static_cast<size_t>(n) + 1);
    for (Item x = 1; x <= m; ++x) owned[1].push_back(x);

    LocalSearchResult res;
    const long long total = value_of(inst, 1, owned[1]);
    if (total == 0) {
        res.allocation = to_allocation(owned, n);
        return res;
    }

    const bool good_phase = total > 0;
    const PotentialKind kind = good_phase ? PotentialKind::GoodMoving : PotentialKind::ChoreMoving;

    long long vmax = 0;
    for (Agent k = 1; k <= n; ++k) {
        vmax = std::max(vmax, value_of(inst, k, part.goods));
        vmax = std::max(vmax, -value_of(inst, k, part.chores));
    }
    const long long bound = vmax * n * m;

    std::vector<long long> val(static_cast<size_t>(n) + 1, 0);
    auto refresh = [&](Agent k) { val[static_cast<size_t>(k)] = value_of(inst, k, owned[static_cast<size_t>(k)]); };
    for (Agent k = 1; k <= n; ++k) refresh(k);

    // The focus agent receives every move: the poorest while goods spread out,
    // the richest while chores do.
    Agent focus = n;
    PotentialTriple last = potential(inst, to_allocation(owned, n), kind);

    while (true) {
        Item moved_item = 0;
        Agent donor = 0;
        if (good_phase) {
            // A donor may hand the focus agent a good as long as the donor
            // stays strictly ahead after parting with it.
            for (Agent j = 1; j <= n && moved_item == 0; ++j) {
                for (Item g : owned[static_cast<size_t>(j)]) {
                    if (!is_good[static_cast<size_t>(g)]) continue;
                    std::vector<Item> rest = owned[static_cast<size_t>(j)];
                    erase_item(rest, g);
                    if (val[static_cast<size_t>(focus)] < value_of(inst, j, rest)) {
                        moved_item = g;
                        donor = j;
                        break;
                    }
                }
            }
        } else {
            // An agent may push one of her chores onto the focus agent as long
            // as she stays strictly behind even after shedding it.
            for (Agent i = 1; i <= n && moved_item == 0; ++i) {
                for (Item c : owned[static_cast<size_t>(i)]) {
                    if (is_good[static_cast<size_t>(c)]) continue;
                    std::vector<Item> rest = owned[static_cast<size_t>(i)];
                    erase_item(rest, c);
                    if (value_of(inst, i, rest) < val[static_cast<size_t>(focus)]) {
                        moved_item = c;
                        donor = i;
                        break;
                    }
                }
            }
        }
        if (moved_item == 0) break;

        erase_item(owned[static_cast<size_t>(donor)], moved_item);
        insert_item(owned[static_cast<size_t>(focus)], moved_item);
        refresh(donor);
        refresh(focus);
        ++res.iterations;
        if (res.iterations > bound)
            throw InternalInvariantViolation("local search exceeded its iteration bound");

        PotentialTriple now = potential(inst, to_allocation(owned, n), kind);
        if (!(last < now))
            throw InternalInvariantViolation("local search potential failed to increase");
        if (record_trace) res.trace.push_back({moved_item, donor, focus, now});
        last = now;

        focus = good_phase ? poorest(val, n) : richest(val, n);
    }

    res.allocation = to_allocation(owned, n);
    return res;
}

GreedyResult greedy_eq1(const Instance& inst) {
    ObjectivePartition part = require_objective(inst);
    const int n = inst.n;
    const bool additive = inst.valuation.kind() == ValuationKind::Additive;

    std::vector<std::vector<Item>> owned(static_cast<size_t>(n) + 1);
    std::vector<long long> val(static_cast<size_t>(n) + 1, 0);
    auto give = [&](Agent k, Item x) {
        insert_item(owned[static_cast<size_t>(k)], x);
        if (additive)
            val[static_cast<size_t>(k)] += inst.valuation.value_item(k, x);
        else
            val[static_cast<size_t>(k)] = value_of(inst, k, owned[static_cast<size_t>(k)]);
    };

    for (Item g : part.goods) give(poorest(val, n), g);
    for (Item c : part.chores) give(richest(val, n), c);

    return {to_allocation(owned, n)};
}

GreedyResult strongly_greedy_eqxgc(const Instance& inst) {
    if (inst.valuation.kind() != ValuationKind::Additive)
        throw WrongValuationClass("strongly greedy needs additive valuations");
    ObjectivePartition part = objective_partition(inst);
    const int n = inst.n;

    std::vector<std::vector<Item>> owned(static_cast<size_t>(n) + 1);
    std::vector<long long> val(static_cast<size_t>(n) + 1, 0);

    std::vector<Item> goods = part.goods;
    while (!goods.empty()) {
        Agent k = poorest(val, n);
        size_t pick = 0;
        for (size_t h = 1; h < goods.size(); ++h) {
            if (inst.valuation.value_item(k, goods[h]) > inst.valuation.value_item(k, goods[pick]))
                pick = h;  // ties keep the lowest id, which comes first
        }
        Item g = goods[pick];
        insert_item(owned[static_cast<size_t>(k)], g);
        val[static_cast<size_t>(k)] += inst.valuation.value_item(k, g);
        goods.erase(goods.begin() + static_cast<std::ptrdiff_t>(pick));
    }

    std::vector<Item> chores = part.chores;
    while (!chores.empty()) {
        Agent k = richest(val, n);
        size_t pick = 0;
        for (size_t h = 1; h < chores.size(); ++h) {
            if (inst.valuation.value_item(k, chores[h]) < inst.valuation.value_item(k, chores[pick]))
                pick = h;
        }
        Item c = chores[pick];
        insert_item(owned[static_cast<size_t>(k)], c);
        val[static_cast<size_t>(k)] += inst.valuation.value_item(k, c);
        chores.erase(chores.begin() + static_cast<std::ptrdiff_t>(pick));
    }

    return {to_allocation(owned, n)};
}

}  // namespace fairdiv
