#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <optional>

namespace fairdiv {

bool is_envy_notion(FairnessNotion n) {
    switch (n) {
        case FairnessNotion::EF:
        case FairnessNotion::EFX:
        case FairnessNotion::EF1:
        case FairnessNotion::EF1GoodChore:
        case FairnessNotion::EF1BorderPair:
        case FairnessNotion::EF1OwnBorderChore:
            return true;
        default:
            return false;
    }
}

bool is_equity_notion(FairnessNotion n) { return !is_envy_notion(n); }

std::string notion_name(FairnessNotion n) {
    switch (n) {
        case FairnessNotion::EF: return "ef";
        case FairnessNotion::EFX: return "efx";
        case FairnessNotion::EF1: return "ef1";
        case FairnessNotion::EF1GoodChore: return "ef1-gc";
        case FairnessNotion::EF1BorderPair: return "ef1p-gc";
        case FairnessNotion::EF1OwnBorderChore: return "ef1p";
        case FairnessNotion::EQ: return "eq";
        case FairnessNotion::EQX: return "eqx";
        case FairnessNotion::EQXGoodChore: return "eqx-gc";
        case FairnessNotion::EQ1: return "eq1";
        case FairnessNotion::EQ1GoodChore: return "eq1-gc";
        case FairnessNotion::EQ1BorderPair: return "eq1p-gc";
        case FairnessNotion::EQ1OwnBorderChore: return "eq1p";
    }
    return "?";
}

FairnessNotion notion_from_name(const std::string& name) {
    static const std::pair<const char*, FairnessNotion> table[] = {
        {"ef", FairnessNotion::EF},
        {"efx", FairnessNotion::EFX},
        {"ef1", FairnessNotion::EF1},
        {"ef1-gc", FairnessNotion::EF1GoodChore},
        {"ef1p-gc", FairnessNotion::EF1BorderPair},
        {"ef1p", FairnessNotion::EF1OwnBorderChore},
        {"eq", FairnessNotion::EQ},
        {"eqx", FairnessNotion::EQX},
        {"eqx-gc", FairnessNotion::EQXGoodChore},
        {"eq1", FairnessNotion::EQ1},
        {"eq1-gc", FairnessNotion::EQ1GoodChore},
        {"eq1p-gc", FairnessNotion::EQ1BorderPair},
        {"eq1p", FairnessNotion::EQ1OwnBorderChore},
    };
    for (const auto& [key, value] : table)
        if (name == key) return value;
    throw std::invalid_argument("unknown fairness notion: " + name);
}

namespace {

// One-item-removal values over a fixed bundle, O(1) per query for additive and
// subset valuations. Interval tables can only answer border removals; interior
// ones would be disconnected and raise UnsupportedQuery.
class RemovalEval {
  public:
    RemovalEval(const Instance& inst, Agent agent, const Bundle& b)
        : inst_(&inst), agent_(agent), b_(&b), base_(inst.value(agent, b)) {}

    long long base() const { return base_; }

    long long without(Item x) const {
        const Valuation& v = inst_->valuation;
        switch (v.kind()) {
            case ValuationKind::Additive:
                return base_ - v.value_item(agent_, x);
            case ValuationKind::SubsetTable:
                return v.value(agent_, b_->without(x));
            case ValuationKind::IntervalTable: {
                Interval iv = b_->as_interval();
                if (x == iv.s) return inst_->value(agent_, interval_items(iv.s, iv.t));
                if (x == iv.t) return inst_->value(agent_, interval_items(iv.s - 1, iv.t - 1));
                throw UnsupportedQuery("interval table asked for an interior-item removal");
            }
        }
        return 0;
    }

  private:
    const Instance* inst_;
    Agent agent_;
    const Bundle* b_;
    long long base_;
};

constexpr Item kNoRemoval = 0;

std::vector<Item> with_none_first(std::vector<Item> items) {
    std::vector<Item> out{kNoRemoval};
    out.insert(out.end(), items.begin(), items.end());
    return out;
}

struct Checker {
    const Instance& inst;
    const Allocation& a;
    FairnessVerdict verdict;

    Checker(const Instance& in, const Allocation& alloc, FairnessNotion notion)
        : inst(in), a(alloc) {
        verdict.notion = notion;
        require_allocation_shape(inst, a);
    }

    void require_connected(const char* what) {
        if (!a.connected()) throw NotConnected(std::string(what) + " needs a connected allocation");
    }

    void violation(Agent i, Agent j) {
        verdict.holds = false;
        verdict.violations.emplace_back(i, j);
    }

    void witness(Agent i, Agent j, Item x, Item y) {
        if (x == kNoRemoval && y == kNoRemoval) return;  // nothing was removed
        RemovalWitness w{i, j, {}};
        if (x != kNoRemoval) w.removed.push_back(x);
        if (y != kNoRemoval) w.removed.push_back(y);
        verdict.witnesses.push_back(std::move(w));
    }

    // Scans removal pairs (x from the i side, y from the j side) in
    // lexicographic order with "remove nothing" first; left/right values come
    // from the two evaluators. Returns the first pair satisfying
    // left(x) >= right(y), if any.
    std::optional<std::pair<Item, Item>> first_removal_pair(const RemovalEval& left,
                                                            const RemovalEval& right,
                                                            const std::vector<Item>& xs,
                                                            const std::vector<Item>& ys) {
        for (Item x : xs) {
            long long lv = (x == kNoRemoval) ? left.base() : left.without(x);
            for (Item y : ys) {
                long long rv = (y == kNoRemoval) ? right.base() : right.without(y);
                if (lv >= rv) return std::make_pair(x, y);
            }
        }
        return std::nullopt;
    }
};

// Goods for `owner` within her bundle: dropping one does not raise the value.
std::vector<Item> goods_within(const RemovalEval& e, const Bundle& b) {
    std::vector<Item> out;
    for (Item x : b.items())
        if (e.base() >= e.without(x)) out.push_back(x);
    return out;
}

std::vector<Item> chores_within(const RemovalEval& e, const Bundle& b) {
    std::vector<Item> out;
    for (Item x : b.items())
        if (e.base() <= e.without(x)) out.push_back(x);
    return out;
}

}  // namespace

FairnessVerdict check_envy(const Instance& inst, const Allocation& a, FairnessNotion notion) {
    if (!is_envy_notion(notion)) throw std::invalid_argument("not an envy notion");
    Checker ck(inst, a, notion);
    int n = inst.n;
    if (notion == FairnessNotion::EF1BorderPair || notion == FairnessNotion::EF1OwnBorderChore)
        ck.require_connected(notion_name(notion).c_str());

    for (Agent i = 1; i <= n; ++i) {
        const Bundle& ai = a.of(i);
        RemovalEval own(inst, i, ai);
        for (Agent j = 1; j <= n; ++j) {
            if (j == i) continue;
            const Bundle& aj = a.of(j);
            RemovalEval other(inst, i, aj);  // the other bundle through i's eyes

            switch (notion) {
                case FairnessNotion::EF: {
                    if (own.base() < other.base()) ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EFX: {
                    if (own.base() >= other.base()) break;
                    std::vector<Item> goods = goods_within(other, aj);
                    std::vector<Item> chores = chores_within(own, ai);
                    bool ok = !goods.empty() || !chores.empty();
                    for (Item g : goods)
                        if (own.base() < other.without(g)) ok = false;
                    for (Item c : chores)
                        if (own.without(c) < other.base()) ok = false;
                    if (!ok) ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EF1: {
                    if (own.base() >= other.base()) break;
                    std::vector<Item> candidates;
                    std::merge(ai.items().begin(), ai.items().end(), aj.items().begin(),
                               aj.items().end(), std::back_inserter(candidates));
                    bool fixed = false;
                    for (Item x : candidates) {
                        long long lv = ai.contains(x) ? own.without(x) : own.base();
                        long long rv = aj.contains(x) ? other.without(x) : other.base();
                        if (lv >= rv) {
                            ck.witness(i, j, ai.contains(x) ? x : kNoRemoval,
                                       aj.contains(x) ? x : kNoRemoval);
                            fixed = true;
                            break;
                        }
                    }
                    if (!fixed) ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EF1GoodChore: {
                    auto hit = ck.first_removal_pair(own, other, with_none_first(ai.items()),
                                                     with_none_first(aj.items()));
                    if (hit)
                        ck.witness(i, j, hit->first, hit->second);
                    else
                        ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EF1BorderPair: {
                    auto hit = ck.first_removal_pair(own, other, with_none_first(ai.border()),
                                                     with_none_first(aj.border()));
                    if (hit)
                        ck.witness(i, j, hit->first, hit->second);
                    else
                        ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EF1OwnBorderChore: {
                    bool fixed = false;
                    for (Item x : with_none_first(ai.border())) {
                        long long lv = (x == kNoRemoval) ? own.base() : own.without(x);
                        if (lv >= other.base()) {
                            ck.witness(i, j, x, kNoRemoval);
                            fixed = true;
                            break;
                        }
                    }
                    if (!fixed) ck.violation(i, j);
                    break;
                }
                default:
                    break;
            }
        }
    }
    return ck.verdict;
}

FairnessVerdict check_equity(const Instance& inst, const Allocation& a, FairnessNotion notion) {
    if (!is_equity_notion(notion)) throw std::invalid_argument("not an equity notion");
    Checker ck(inst, a, notion);
    int n = inst.n;
    if (notion == FairnessNotion::EQ1BorderPair || notion == FairnessNotion::EQ1OwnBorderChore)
        ck.require_connected(notion_name(notion).c_str());

    std::vector<RemovalEval> own;
    own.reserve(static_cast<size_t>(n));
    for (Agent i = 1; i <= n; ++i) own.emplace_back(inst, i, a.of(i));
    auto eval = [&](Agent i) -> const RemovalEval& { return own[static_cast<size_t>(i) - 1]; };

    if (notion == FairnessNotion::EQXGoodChore) {
        // Per-agent clauses: either every richer agent j holds a good whose
        // removal would level them down to i, or i holds a chore whose removal
        // levels i up to every richer j. Vacuous when nobody is richer.
        //
        // When the items split globally into goods and chores, the clauses
        // quantify over that split (dummies count as goods). A zero-marginal
        // item whose global kind is the opposite one would otherwise be
        // impossible to level with, and the objective solvers are entitled to
        // leave such items behind. Without a split, membership is per bundle.
        std::optional<ObjectivePartition> split;
        if (inst.valuation.kind() != ValuationKind::IntervalTable)
            split = std::move(classify(inst).objective);
        std::vector<char> global_good;
        if (split) {
            global_good.assign(static_cast<size_t>(inst.m) + 1, 0);
            for (Item g : split->goods) global_good[static_cast<size_t>(g)] = 1;
        }
        auto goods_of = [&](Agent j) {
            if (!split) return goods_within(eval(j), a.of(j));
            std::vector<Item> out;
            for (Item x : a.of(j).items())
                if (global_good[static_cast<size_t>(x)]) out.push_back(x);
            return out;
        };
        auto chores_of = [&](Agent i) {
            if (!split) return chores_within(eval(i), a.of(i));
            std::vector<Item> out;
            for (Item x : a.of(i).items())
                if (!global_good[static_cast<size_t>(x)]) out.push_back(x);
            return out;
        };

        for (Agent i = 1; i <= n; ++i) {
            std::vector<Agent> richer;
            for (Agent j = 1; j <= n; ++j)
                if (j != i && eval(i).base() < eval(j).base()) richer.push_back(j);
            if (richer.empty()) continue;

            bool clause_goods = true;
            Agent goods_breaker = richer.front();
            for (Agent j : richer) {
                std::vector<Item> goods = goods_of(j);
                bool ok = !goods.empty();
                for (Item g : goods)
                    if (eval(i).base() < eval(j).without(g)) ok = false;
                if (!ok) {
                    clause_goods = false;
                    goods_breaker = j;
                    break;
                }
            }
            if (clause_goods) continue;

            std::vector<Item> chores = chores_of(i);
            bool clause_chores = !chores.empty();
            for (Agent j : richer)
                for (Item c : chores)
                    if (eval(i).without(c) < eval(j).base()) clause_chores = false;
            if (!clause_chores) ck.violation(i, goods_breaker);
        }
        return ck.verdict;
    }

    for (Agent i = 1; i <= n; ++i) {
        const Bundle& ai = a.of(i);
        for (Agent j = 1; j <= n; ++j) {
            if (j == i) continue;
            const Bundle& aj = a.of(j);

            switch (notion) {
                case FairnessNotion::EQ: {
                    if (eval(i).base() < eval(j).base()) ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EQX: {
                    if (eval(i).base() >= eval(j).base()) break;
                    std::vector<Item> goods = goods_within(eval(j), aj);
                    std::vector<Item> chores = chores_within(eval(i), ai);
                    bool ok = !goods.empty() || !chores.empty();
                    for (Item g : goods)
                        if (eval(i).base() < eval(j).without(g)) ok = false;
                    for (Item c : chores)
                        if (eval(i).without(c) < eval(j).base()) ok = false;
                    if (!ok) ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EQ1: {
                    if (eval(i).base() >= eval(j).base()) break;
                    std::vector<Item> candidates;
                    std::merge(ai.items().begin(), ai.items().end(), aj.items().begin(),
                               aj.items().end(), std::back_inserter(candidates));
                    bool fixed = false;
                    for (Item x : candidates) {
                        long long lv = ai.contains(x) ? eval(i).without(x) : eval(i).base();
                        long long rv = aj.contains(x) ? eval(j).without(x) : eval(j).base();
                        if (lv >= rv) {
                            ck.witness(i, j, ai.contains(x) ? x : kNoRemoval,
                                       aj.contains(x) ? x : kNoRemoval);
                            fixed = true;
                            break;
                        }
                    }
                    if (!fixed) ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EQ1GoodChore: {
                    auto hit = ck.first_removal_pair(eval(i), eval(j), with_none_first(ai.items()),
                                                     with_none_first(aj.items()));
                    if (hit)
                        ck.witness(i, j, hit->first, hit->second);
                    else
                        ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EQ1BorderPair: {
                    auto hit = ck.first_removal_pair(eval(i), eval(j), with_none_first(ai.border()),
                                                     with_none_first(aj.border()));
                    if (hit)
                        ck.witness(i, j, hit->first, hit->second);
                    else
                        ck.violation(i, j);
                    break;
                }
                case FairnessNotion::EQ1OwnBorderChore: {
                    bool fixed = false;
                    for (Item x : with_none_first(ai.border())) {
                        long long lv = (x == kNoRemoval) ? eval(i).base() : eval(i).without(x);
                        if (lv >= eval(j).base()) {
                            ck.witness(i, j, x, kNoRemoval);
                            fixed = true;
                            break;
                        }
                    }
                    if (!fixed) ck.violation(i, j);
                    break;
                }
                default:
                    break;
            }
        }
    }
    return ck.verdict;
}

FairnessVerdict check(const Instance& inst, const Allocation& a, FairnessNotion notion) {
    return is_envy_notion(notion) ? check_envy(inst, a, notion) : check_equity(inst, a, notion);
}

}  // namespace fairdiv
