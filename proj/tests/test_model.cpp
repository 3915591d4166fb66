#include "doctest.h"

#include <vector>

#include "fairdiv/model.hpp"

using namespace fairdiv;

namespace {

Instance additive_instance(std::vector<std::vector<long long>> values) {
    int n = static_cast<int>(values.size());
    int m = static_cast<int>(values[0].size());
    return Instance{n, m, Valuation::additive(std::move(values))};
}

// Cardinality interval table: v_i(s..t) = t - s + 1 for every agent.
Instance cardinality_interval(int n, int m) {
    std::vector<std::vector<std::vector<long long>>> table(n);
    for (int i = 0; i < n; ++i) {
        table[i].resize(m);
        for (int s = 1; s <= m; ++s)
            for (int t = s; t <= m; ++t) table[i][s - 1].push_back(t - s + 1);
    }
    return Instance{n, m, Valuation::interval_table(std::move(table))};
}

}  // namespace

TEST_CASE("interval_items uses the half-open cut convention") {
    CHECK(interval_items(0, 3) == Interval{1, 3});
    CHECK(interval_items(2, 5) == Interval{3, 5});
    CHECK(interval_items(2, 2).empty());
    CHECK(interval_items(3, 1).empty());
    CHECK(interval_items(3, 1) == Interval{1, 0});
    CHECK(Interval{}.empty());
    CHECK(Interval{2, 4}.size() == 3);
    CHECK(Interval{2, 4}.contains(2));
    CHECK(!Interval{2, 4}.contains(5));
}

TEST_CASE("bundles sort, deduplicate and track connectivity") {
    Bundle b(std::vector<Item>{3, 1, 2});
    CHECK(b.connected());
    CHECK(b.items() == std::vector<Item>{1, 2, 3});
    CHECK(b.as_interval() == Interval{1, 3});
    CHECK(b.border() == std::vector<Item>{1, 3});

    Bundle gap(std::vector<Item>{1, 3});
    CHECK(!gap.connected());
    CHECK(gap.mask() == 0b101u);
    CHECK_THROWS_AS(gap.as_interval(), UnsupportedQuery);
    CHECK_THROWS_AS(gap.border(), UnsupportedQuery);

    Bundle dup(std::vector<Item>{2, 2, 2});
    CHECK(dup.size() == 1);
    CHECK(dup == Bundle::interval(2, 2));
    CHECK(dup.border() == std::vector<Item>{2});

    Bundle empty;
    CHECK(empty.empty());
    CHECK(empty.connected());
    CHECK(empty.as_interval().empty());

    CHECK(b.without(2) == Bundle(std::vector<Item>{1, 3}));
    CHECK(!b.without(2).connected());
    CHECK(b.without(7) == b);
}

TEST_CASE("additive valuations evaluate any bundle") {
    Instance inst = additive_instance({{3, -1, 4}, {0, 2, 2}});
    CHECK(inst.value(1, Bundle::interval(1, 3)) == 6);
    CHECK(inst.value(1, Interval{2, 3}) == 3);
    CHECK(inst.value(2, Bundle(std::vector<Item>{1, 3})) == 2);
    CHECK(inst.value(1, Interval{}) == 0);
    CHECK(inst.valuation.value_item(1, 2) == -1);
    CHECK(inst.valuation.additive_values()[1][2] == 2);
}

TEST_CASE("interval tables answer connected queries only") {
    Instance inst = cardinality_interval(2, 4);
    CHECK(inst.value(1, Interval{1, 4}) == 4);
    CHECK(inst.value(2, Interval{2, 3}) == 2);
    CHECK(inst.value(1, Bundle::interval(3, 3)) == 1);
    CHECK(inst.value(1, Interval{}) == 0);
    CHECK(inst.valuation.value_item(2, 4) == 1);
    CHECK_THROWS_AS(inst.value(1, Bundle(std::vector<Item>{1, 3})), UnsupportedQuery);
    CHECK_THROWS_AS(inst.valuation.additive_values(), UnsupportedQuery);
}

TEST_CASE("subset tables evaluate through the bitmask") {
    // One agent over two items, superadditive.
    Instance inst{1, 2, Valuation::subset_table({{0, 3, 4, 10}})};
    CHECK(inst.value(1, Bundle(std::vector<Item>{1})) == 3);
    CHECK(inst.value(1, Bundle(std::vector<Item>{2})) == 4);
    CHECK(inst.value(1, Bundle(std::vector<Item>{1, 2})) == 10);
    CHECK(inst.value(1, Interval{1, 2}) == 10);
    CHECK(inst.value(1, Interval{}) == 0);
    CHECK(inst.valuation.value_item(1, 2) == 4);
}

TEST_CASE("valuation factories reject malformed shapes") {
    CHECK_THROWS_AS(Valuation::additive({{1, 2}, {1}}), std::invalid_argument);
    // Triangular row of the wrong length.
    CHECK_THROWS_AS(Valuation::interval_table({{{1, 2}, {1, 2}}}), std::invalid_argument);
    // Subset table must have 2^m entries and value 0 for the empty set.
    CHECK_THROWS_AS(Valuation::subset_table({{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Valuation::subset_table({{5, 1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("v_plus and v_minus scan the two border drops") {
    Instance inst = additive_instance({{1, 2, 3}});
    // Whole 6, drop left 5, drop right 3.
    CHECK(v_plus(inst, 1, Interval{1, 3}) == 6);
    CHECK(v_minus(inst, 1, Interval{1, 3}) == 3);
    // Mixed signs pull the envelope apart.
    Instance mixed = additive_instance({{-2, 5, -1}});
    CHECK(v_plus(mixed, 1, Interval{1, 3}) == 4);   // drop the left chore
    CHECK(v_minus(mixed, 1, Interval{1, 3}) == 2);  // whole interval
    CHECK(v_plus(mixed, 1, Interval{}) == 0);
    CHECK(v_minus(mixed, 1, Interval{}) == 0);
    // Singleton: drops give the empty set.
    CHECK(v_plus(mixed, 1, Interval{1, 1}) == 0);
    CHECK(v_minus(mixed, 1, Interval{1, 1}) == -2);
}

TEST_CASE("good and chore are relative to the holding bundle") {
    // Non-monotone: v({1}) = 2, v({1,2}) = 1, v({2}) = 0.
    Instance inst{1, 2, Valuation::subset_table({{0, 2, 0, 1}})};

    Bundle both(std::vector<Item>{1, 2});
    // Dropping 1 lowers 1 -> 0: a good. Dropping 2 raises 1 -> 2: a chore.
    CHECK(is_good_in(inst, 1, both, 1));
    CHECK(!is_chore_in(inst, 1, both, 1));
    CHECK(is_chore_in(inst, 1, both, 2));
    CHECK(!is_good_in(inst, 1, both, 2));
    // Alone, item 2 is worthless: a dummy, so both.
    Bundle two(std::vector<Item>{2});
    CHECK(is_good_in(inst, 1, two, 2));
    CHECK(is_chore_in(inst, 1, two, 2));
}

TEST_CASE("classify reads signs, additivity and monotonicity") {
    ValuationClass goods = classify(additive_instance({{0, 2}, {1, 3}}));
    CHECK(goods.non_negative);
    CHECK(!goods.non_positive);
    CHECK(goods.additive);
    CHECK(goods.monotone_non_decreasing);
    CHECK(!goods.monotone_non_increasing);
    REQUIRE(goods.objective.has_value());
    CHECK(goods.objective->goods == std::vector<Item>{1, 2});
    CHECK(goods.objective->chores.empty());

    ValuationClass chores = classify(additive_instance({{-1, -2}}));
    CHECK(chores.non_positive);
    CHECK(chores.monotone_non_increasing);
    REQUIRE(chores.objective.has_value());
    CHECK(chores.objective->chores == std::vector<Item>{1, 2});

    // Item 1 is a good for agent 1 and a chore for agent 2: no partition.
    ValuationClass split = classify(additive_instance({{1, 1}, {-1, 1}}));
    CHECK(!split.objective.has_value());
    CHECK(!split.non_negative);
    CHECK(!split.non_positive);

    // Item-wise signs agree even though signs mix across items.
    ValuationClass obj = classify(additive_instance({{2, -1}, {0, -3}}));
    REQUIRE(obj.objective.has_value());
    CHECK(obj.objective->goods == std::vector<Item>{1});
    CHECK(obj.objective->chores == std::vector<Item>{2});
}

TEST_CASE("classify on tables") {
    ValuationClass card = classify(cardinality_interval(2, 3));
    CHECK(card.non_negative);
    CHECK(!card.non_positive);
    // Interval tables never claim the subset-defined properties.
    CHECK(!card.additive);
    CHECK(!card.monotone_non_decreasing);
    CHECK(!card.objective.has_value());

    // Additive-consistent subset table is recognized as additive.
    Instance inst{1, 2, Valuation::subset_table({{0, 1, 2, 3}})};
    ValuationClass sub = classify(inst);
    CHECK(sub.additive);
    CHECK(sub.non_negative);
    CHECK(sub.monotone_non_decreasing);
    REQUIRE(sub.objective.has_value());
    CHECK(sub.objective->goods == std::vector<Item>{1, 2});

    // Superadditive: not additive, still monotone and objective.
    Instance super_inst{1, 2, Valuation::subset_table({{0, 1, 1, 5}})};
    ValuationClass sup = classify(super_inst);
    CHECK(!sup.additive);
    CHECK(sup.monotone_non_decreasing);
    REQUIRE(sup.objective.has_value());
}

TEST_CASE("objective_partition routes dummies to goods") {
    ObjectivePartition part = objective_partition(additive_instance({{0, -2}, {0, -1}}));
    CHECK(part.goods == std::vector<Item>{1});
    CHECK(part.chores == std::vector<Item>{2});

    CHECK_THROWS_AS(objective_partition(additive_instance({{1}, {-1}})), WrongValuationClass);
    CHECK_THROWS_AS(objective_partition(cardinality_interval(2, 2)), UnsupportedQuery);
}

TEST_CASE("allocation shape validation accepts partial allocations") {
    Instance inst = additive_instance({{1, 1, 1}, {1, 1, 1}});
    Allocation partial;
    partial.bundles = {Bundle::interval(1, 1), Bundle()};
    CHECK_NOTHROW(require_allocation_shape(inst, partial));
    CHECK(!allocation_complete(inst, partial));

    Allocation full;
    full.bundles = {Bundle::interval(1, 2), Bundle::interval(3, 3)};
    CHECK_NOTHROW(require_allocation_shape(inst, full));
    CHECK(allocation_complete(inst, full));
    CHECK(full.connected());
    CHECK(full.of(2) == Bundle::interval(3, 3));

    Allocation wrong_count;
    wrong_count.bundles = {Bundle::interval(1, 3)};
    CHECK_THROWS_AS(require_allocation_shape(inst, wrong_count), std::invalid_argument);

    Allocation out_of_range;
    out_of_range.bundles = {Bundle::interval(1, 4), Bundle()};
    CHECK_THROWS_AS(require_allocation_shape(inst, out_of_range), std::invalid_argument);

    Allocation overlap;
    overlap.bundles = {Bundle::interval(1, 2), Bundle::interval(2, 3)};
    CHECK_THROWS_AS(require_allocation_shape(inst, overlap), std::invalid_argument);
}
