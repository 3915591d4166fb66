#include "fairdiv/path_solvers.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

namespace {

void require_signed_class(const Instance& inst, const char* who, bool& non_negative) {
    ValuationClass c = classify(inst);
    if (c.non_negative)
        non_negative = true;  // all-zero instances take the non-negative route
    else if (c.non_positive)
        non_negative = false;
    else
        throw WrongValuationClass(std::string(who) +
                                  " needs a non-negative or non-positive valuation");
}

std::vector<Agent> identity_order(int n) {
    std::vector<Agent> rho(static_cast<size_t>(n));
    std::iota(rho.begin(), rho.end(), 1);
    return rho;
}

void check_budget(const Triangulation& t, long long scale_budget) {
    if (t.simplex_count() > scale_budget)
        throw ScaleLimit("triangulation has " + std::to_string(t.simplex_count()) +
                         " cells, budget is " + std::to_string(scale_budget));
}

Allocation assign_in_path_order(int n, const std::vector<Interval>& bundles) {
    Allocation a;
    a.bundles.reserve(static_cast<size_t>(n));
    for (const Interval& iv : bundles) a.bundles.emplace_back(iv);
    return a;
}

}  // namespace

DpResult solve_eq1p_gc_dp(const Instance& inst, const std::vector<Agent>& rho_in) {
    bool non_negative = false;
    require_signed_class(inst, "eq1p-gc dp", non_negative);
    int n = inst.n, m = inst.m;
    std::vector<Agent> rho = rho_in.empty() ? identity_order(n) : rho_in;
    if (static_cast<int>(rho.size()) != n) throw std::invalid_argument("agent order has wrong size");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (Agent i : rho) {
        if (i < 1 || i > n || seen[static_cast<size_t>(i)])
            throw std::invalid_argument("agent order must be a permutation of 1..n");
        seen[static_cast<size_t>(i)] = 1;
    }

    // Candidate common values: 0 and every interval value of every agent.
    std::vector<long long> candidates{0};
    for (Agent i = 1; i <= n; ++i)
        for (int s = 1; s <= m; ++s)
            for (int t = s; t <= m; ++t) candidates.push_back(inst.value(i, Interval{s, t}));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // vp/vm[k][s][t]: border-removal extremes for the agent taking the k-th
    // bundle, padded with the empty interval at s > t.
    auto fits = [&](int layer, int s, int t, long long c) {
        Interval iv = (t >= s) ? Interval{s, t} : Interval{};
        Agent agent = rho[static_cast<size_t>(layer) - 1];
        return v_plus(inst, agent, iv) >= c && c >= v_minus(inst, agent, iv);
    };

    DpResult result;
    for (long long c : candidates) {
        ++result.candidates_tried;
        // feasible[i][j]: items 1..j split into i intervals, each fitting c.
        std::vector<std::vector<bool>> feasible(static_cast<size_t>(n) + 1,
                                                std::vector<bool>(static_cast<size_t>(m) + 1, false));
        for (int j = 0; j <= m; ++j) feasible[1][static_cast<size_t>(j)] = fits(1, 1, j, c);
        for (int i = 2; i <= n; ++i)
            for (int j = 0; j <= m; ++j)
                for (int l = 1; l <= j + 1; ++l)
                    if (feasible[static_cast<size_t>(i) - 1][static_cast<size_t>(l) - 1] &&
                        fits(i, l, j, c)) {
                        feasible[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
                        break;
                    }
        if (!feasible[static_cast<size_t>(n)][static_cast<size_t>(m)]) continue;

        // Reconstruct right to left, preferring the smallest left endpoint.
        std::vector<Interval> bundles(static_cast<size_t>(n));
        int j = m;
        for (int i = n; i >= 2; --i) {
            for (int l = 1; l <= j + 1; ++l) {
                if (feasible[static_cast<size_t>(i) - 1][static_cast<size_t>(l) - 1] &&
                    fits(i, l, j, c)) {
                    bundles[static_cast<size_t>(i) - 1] = (j >= l) ? Interval{l, j} : Interval{};
                    j = l - 1;
                    break;
                }
            }
        }
        bundles[0] = (j >= 1) ? Interval{1, j} : Interval{};

        result.allocation.bundles.assign(static_cast<size_t>(n), Bundle{});
        for (int k = 1; k <= n; ++k)
            result.allocation.bundles[static_cast<size_t>(rho[static_cast<size_t>(k) - 1]) - 1] =
                Bundle(bundles[static_cast<size_t>(k) - 1]);
        result.c = c;
        return result;
    }
    throw InternalInvariantViolation("no feasible common value; the candidate set should carry one");
}

SpernerSolveResult solve_eq1p_gc_sperner(const Instance& inst, long long scale_budget) {
    bool non_negative = false;
    require_signed_class(inst, "eq1p-gc sperner", non_negative);
    int n = inst.n, m = inst.m;

    if (n == 1) return {assign_in_path_order(1, {m >= 1 ? Interval{1, m} : Interval{}}), 0};
    if (m == 0) return {assign_in_path_order(n, std::vector<Interval>(static_cast<size_t>(n))), 0};

    Triangulation t{n, m};
    check_budget(t, scale_budget);

    std::optional<FullyColoredHit> hit;
    if (non_negative) {
        Coloring col = coloring_equity(t, inst);
        hit = find_fully_colored(t, col);
    } else {
        MultiColoring col = multicoloring_equity(t, inst);
        hit = find_fully_colored_multi(t, col);
    }
    if (!hit) throw InternalInvariantViolation("no fully-colored cell for a signed instance");

    std::vector<Interval> rounded = round_main_allocation(t, hit->simplex);
    return {assign_in_path_order(n, rounded), hit->scanned};
}

SpernerSolveResult solve_ef1p_gc_sperner(const Instance& inst, long long scale_budget) {
    bool non_negative = false;
    require_signed_class(inst, "ef1p-gc sperner", non_negative);
    int n = inst.n, m = inst.m;

    if (n == 1) return {assign_in_path_order(1, {m >= 1 ? Interval{1, m} : Interval{}}), 0};
    if (m == 0) return {assign_in_path_order(n, std::vector<Interval>(static_cast<size_t>(n))), 0};

    Triangulation t{n, m};
    check_budget(t, scale_budget);

    std::optional<JointHit> hit;
    if (non_negative) {
        std::vector<Coloring> cols;
        cols.reserve(static_cast<size_t>(n));
        for (Agent i = 1; i <= n; ++i) cols.push_back(coloring_envy(t, inst, i));
        hit = find_jointly_fully_colored(t, cols);
    } else {
        std::vector<MultiColoring> cols;
        cols.reserve(static_cast<size_t>(n));
        for (Agent i = 1; i <= n; ++i) cols.push_back(multicoloring_envy(t, inst, i));
        hit = find_jointly_fully_colored_multi(t, cols);
    }
    if (!hit) throw InternalInvariantViolation("no jointly fully-colored cell for a signed instance");

    std::vector<Interval> rounded = round_main_allocation(t, hit->simplex);
    Allocation a;
    a.bundles.assign(static_cast<size_t>(n), Bundle{});
    for (Agent i = 1; i <= n; ++i)
        a.bundles[static_cast<size_t>(i) - 1] =
            Bundle(rounded[static_cast<size_t>(hit->tau[static_cast<size_t>(i) - 1]) - 1]);
    return {a, hit->scanned};
}

}  // namespace fairdiv
