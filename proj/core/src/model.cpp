#include "fairdiv/model.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

Interval interval_items(int p, int q) {
    if (q > p) return Interval{p + 1, q};
    return Interval{};
}

Bundle::Bundle(Interval iv) {
    if (!iv.empty()) {
        items_.resize(static_cast<size_t>(iv.size()));
        std::iota(items_.begin(), items_.end(), iv.s);
    }
    connected_ = true;
}

Bundle::Bundle(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    connected_ = true;
    for (size_t k = 1; k < items_.size(); ++k) {
        if (items_[k] != items_[k - 1] + 1) {
            connected_ = false;
            break;
        }
    }
}

bool Bundle::contains(Item x) const {
    if (items_.empty()) return false;
    if (connected_) return items_.front() <= x && x <= items_.back();
    return std::binary_search(items_.begin(), items_.end(), x);
}

Interval Bundle::as_interval() const {
    if (items_.empty()) return Interval{};
    if (!connected_) throw UnsupportedQuery("bundle is not connected");
    return Interval{items_.front(), items_.back()};
}

std::vector<Item> Bundle::border() const {
    if (items_.empty()) return {};
    if (!connected_) throw UnsupportedQuery("border of a disconnected bundle");
    if (items_.front() == items_.back()) return {items_.front()};
    return {items_.front(), items_.back()};
}

std::uint32_t Bundle::mask() const {
    std::uint32_t m = 0;
    for (Item x : items_) m |= (1u << (x - 1));
    return m;
}

Bundle Bundle::without(Item x) const {
    std::vector<Item> rest;
    rest.reserve(items_.size());
    for (Item y : items_)
        if (y != x) rest.push_back(y);
    return Bundle(std::move(rest));
}

bool Allocation::connected() const {
    return std::all_of(bundles.begin(), bundles.end(),
                       [](const Bundle& b) { return b.connected(); });
}

Valuation Valuation::additive(std::vector<std::vector<long long>> item_values) {
    Valuation v;
    v.kind_ = ValuationKind::Additive;
    v.n_ = static_cast<int>(item_values.size());
    v.m_ = v.n_ > 0 ? static_cast<int>(item_values[0].size()) : 0;
    for (const auto& row : item_values)
        if (static_cast<int>(row.size()) != v.m_)
            throw std::invalid_argument("ragged additive value rows");
    v.additive_ = std::move(item_values);
    v.prefix_.assign(static_cast<size_t>(v.n_), std::vector<long long>(static_cast<size_t>(v.m_) + 1, 0));
    for (int i = 0; i < v.n_; ++i)
        for (int x = 1; x <= v.m_; ++x)
            v.prefix_[i][x] = v.prefix_[i][x - 1] + v.additive_[i][x - 1];
    return v;
}

Valuation Valuation::interval_table(std::vector<std::vector<std::vector<long long>>> table) {
    Valuation v;
    v.kind_ = ValuationKind::IntervalTable;
    v.n_ = static_cast<int>(table.size());
    v.m_ = v.n_ > 0 ? static_cast<int>(table[0].size()) : 0;
    for (const auto& per_agent : table) {
        if (static_cast<int>(per_agent.size()) != v.m_)
            throw std::invalid_argument("ragged interval table");
        for (int s = 1; s <= v.m_; ++s)
            if (static_cast<int>(per_agent[s - 1].size()) != v.m_ - s + 1)
                throw std::invalid_argument("interval table row for start " + std::to_string(s) +
                                            " must cover ends " + std::to_string(s) + ".." +
                                            std::to_string(v.m_));
    }
    v.interval_ = std::move(table);
    return v;
}

Valuation Valuation::subset_table(std::vector<std::vector<long long>> tables) {
    Valuation v;
    v.kind_ = ValuationKind::SubsetTable;
    v.n_ = static_cast<int>(tables.size());
    if (v.n_ == 0) throw std::invalid_argument("subset table needs at least one agent");
    size_t size = tables[0].size();
    int m = 0;
    while ((size_t{1} << m) < size) ++m;
    if ((size_t{1} << m) != size || m > 20)
        throw std::invalid_argument("subset table size must be a power of two, at most 2^20");
    v.m_ = m;
    for (const auto& t : tables) {
        if (t.size() != size) throw std::invalid_argument("ragged subset tables");
        if (t[0] != 0) throw std::invalid_argument("subset table must assign 0 to the empty set");
    }
    v.subset_ = std::move(tables);
    return v;
}

long long Valuation::value(Agent i, const Interval& iv) const {
    if (iv.empty()) return 0;
    size_t a = static_cast<size_t>(i) - 1;
    switch (kind_) {
        case ValuationKind::Additive:
            return prefix_[a][static_cast<size_t>(iv.t)] - prefix_[a][static_cast<size_t>(iv.s) - 1];
        case ValuationKind::IntervalTable:
            return interval_[a][static_cast<size_t>(iv.s) - 1][static_cast<size_t>(iv.t - iv.s)];
        case ValuationKind::SubsetTable:
            // m <= 20 is enforced at construction, so the shifts are safe.
            return subset_[a][(1u << iv.t) - (1u << (iv.s - 1))];
    }
    return 0;
}

long long Valuation::value(Agent i, const Bundle& b) const {
    if (b.empty()) return 0;
    size_t a = static_cast<size_t>(i) - 1;
    switch (kind_) {
        case ValuationKind::Additive: {
            if (b.connected()) return value(i, b.as_interval());
            long long sum = 0;
            for (Item x : b.items()) sum += additive_[a][static_cast<size_t>(x) - 1];
            return sum;
        }
        case ValuationKind::IntervalTable:
            if (!b.connected()) throw UnsupportedQuery("interval table asked for a disconnected bundle");
            return value(i, b.as_interval());
        case ValuationKind::SubsetTable:
            return subset_[a][b.mask()];
    }
    return 0;
}

long long Valuation::value_item(Agent i, Item x) const {
    size_t a = static_cast<size_t>(i) - 1;
    switch (kind_) {
        case ValuationKind::Additive:
            return additive_[a][static_cast<size_t>(x) - 1];
        case ValuationKind::SubsetTable:
            return subset_[a][1u << (x - 1)];
        case ValuationKind::IntervalTable:
            return interval_[a][static_cast<size_t>(x) - 1][0];
    }
    return 0;
}

const std::vector<std::vector<long long>>& Valuation::additive_values() const {
    if (kind_ != ValuationKind::Additive) throw UnsupportedQuery("not an additive valuation");
    return additive_;
}

long long v_plus(const Instance& inst, Agent i, const Interval& iv) {
    if (iv.empty()) return 0;
    long long whole = inst.value(i, iv);
    long long drop_left = inst.value(i, interval_items(iv.s, iv.t));
    long long drop_right = inst.value(i, interval_items(iv.s - 1, iv.t - 1));
    return std::max({whole, drop_left, drop_right});
}

long long v_minus(const Instance& inst, Agent i, const Interval& iv) {
    if (iv.empty()) return 0;
    long long whole = inst.value(i, iv);
    long long drop_left = inst.value(i, interval_items(iv.s, iv.t));
    long long drop_right = inst.value(i, interval_items(iv.s - 1, iv.t - 1));
    return std::min({whole, drop_left, drop_right});
}

bool is_good_in(const Instance& inst, Agent i, const Bundle& s, Item x) {
    return inst.value(i, s) >= inst.value(i, s.without(x));
}

bool is_chore_in(const Instance& inst, Agent i, const Bundle& s, Item x) {
    return inst.value(i, s) <= inst.value(i, s.without(x));
}

namespace {

// Global good: adding x never lowers any agent's value; global chore: never
// raises it. Only decidable when arbitrary subsets are evaluable.
void global_item_signs(const Instance& inst, std::vector<bool>& good, std::vector<bool>& chore) {
    int n = inst.n, m = inst.m;
    good.assign(static_cast<size_t>(m) + 1, true);
    chore.assign(static_cast<size_t>(m) + 1, true);
    if (inst.valuation.kind() == ValuationKind::Additive) {
        for (Item x = 1; x <= m; ++x)
            for (Agent i = 1; i <= n; ++i) {
                long long v = inst.valuation.value_item(i, x);
                if (v < 0) good[static_cast<size_t>(x)] = false;
                if (v > 0) chore[static_cast<size_t>(x)] = false;
            }
        return;
    }
    // Subset table: compare v(S) against v(S \ {x}) for every S containing x.
    for (Agent i = 1; i <= n; ++i) {
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<Item> items;
            for (int x = 1; x <= m; ++x)
                if (mask & (1u << (x - 1))) items.push_back(x);
            Bundle b(items);
            long long with = inst.value(i, b);
            for (Item x : items) {
                long long without = inst.value(i, b.without(x));
                if (with < without) good[static_cast<size_t>(x)] = false;
                if (with > without) chore[static_cast<size_t>(x)] = false;
            }
        }
    }
}

}  // namespace

ValuationClass classify(const Instance& inst) {
    ValuationClass c;
    const Valuation& v = inst.valuation;
    int n = inst.n, m = inst.m;

    switch (v.kind()) {
        case ValuationKind::Additive: {
            c.non_negative = c.non_positive = true;
            for (Agent i = 1; i <= n; ++i)
                for (Item x = 1; x <= m; ++x) {
                    long long w = v.value_item(i, x);
                    if (w < 0) c.non_negative = false;
                    if (w > 0) c.non_positive = false;
                }
            c.additive = true;
            break;
        }
        case ValuationKind::IntervalTable: {
            c.non_negative = c.non_positive = true;
            for (Agent i = 1; i <= n; ++i)
                for (int s = 1; s <= m; ++s)
                    for (int t = s; t <= m; ++t) {
                        long long w = v.value(i, Interval{s, t});
                        if (w < 0) c.non_negative = false;
                        if (w > 0) c.non_positive = false;
                    }
            // Monotonicity and the objective split compare a bundle against
            // interior-item removals, which the table cannot answer.
            break;
        }
        case ValuationKind::SubsetTable: {
            c.non_negative = c.non_positive = true;
            for (Agent i = 1; i <= n; ++i)
                for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
                    std::vector<Item> items;
                    for (int x = 1; x <= m; ++x)
                        if (mask & (1u << (x - 1))) items.push_back(x);
                    long long w = v.value(i, Bundle(items));
                    if (w < 0) c.non_negative = false;
                    if (w > 0) c.non_positive = false;
                }
            c.additive = true;
            for (Agent i = 1; i <= n && c.additive; ++i)
                for (std::uint32_t mask = 1; mask < (1u << m) && c.additive; ++mask) {
                    std::vector<Item> items;
                    long long sum = 0;
                    for (int x = 1; x <= m; ++x)
                        if (mask & (1u << (x - 1))) {
                            items.push_back(x);
                            sum += v.value_item(i, x);
                        }
                    if (v.value(i, Bundle(items)) != sum) c.additive = false;
                }
            break;
        }
    }

    if (v.kind() != ValuationKind::IntervalTable) {
        std::vector<bool> good, chore;
        global_item_signs(inst, good, chore);
        bool objective = true;
        ObjectivePartition part;
        for (Item x = 1; x <= m; ++x) {
            if (good[static_cast<size_t>(x)])
                part.goods.push_back(x);  // dummies count as goods
            else if (chore[static_cast<size_t>(x)])
                part.chores.push_back(x);
            else
                objective = false;
        }
        if (objective) c.objective = std::move(part);
        c.monotone_non_decreasing =
            std::all_of(good.begin() + 1, good.end(), [](bool b) { return b; });
        c.monotone_non_increasing =
            std::all_of(chore.begin() + 1, chore.end(), [](bool b) { return b; });
    }
    return c;
}

ObjectivePartition objective_partition(const Instance& inst) {
    if (inst.valuation.kind() == ValuationKind::IntervalTable)
        throw UnsupportedQuery("objective split is undecidable for interval tables");
    ValuationClass c = classify(inst);
    if (!c.objective)
        throw WrongValuationClass("some item is neither a global good nor a global chore");
    return *c.objective;
}

void require_allocation_shape(const Instance& inst, const Allocation& a) {
    if (a.agents() != inst.n) throw std::invalid_argument("allocation has wrong agent count");
    std::vector<bool> seen(static_cast<size_t>(inst.m) + 1, false);
    for (const Bundle& b : a.bundles)
        for (Item x : b.items()) {
            if (x < 1 || x > inst.m) throw std::invalid_argument("item out of range");
            if (seen[static_cast<size_t>(x)]) throw std::invalid_argument("item assigned twice");
            seen[static_cast<size_t>(x)] = true;
        }
}

bool allocation_complete(const Instance& inst, const Allocation& a) {
    int total = 0;
    for (const Bundle& b : a.bundles) total += b.size();
    if (total != inst.m) return false;
    require_allocation_shape(inst, a);
    return true;
}

}  // namespace fairdiv
