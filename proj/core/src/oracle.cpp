#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

constexpr long long kSaturated = std::numeric_limits<long long>::max() / 4;

long long mul_capped(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

long long binomial_capped(int top, int pick) {
    if (pick < 0 || pick > top) return 0;
    pick = std::min(pick, top - pick);
    long long r = 1;
    for (int h = 1; h <= pick; ++h) {
        r = mul_capped(r, top - pick + h);
        if (r >= kSaturated) return kSaturated;
        r /= h;
    }
    return r;
}

Allocation from_owned(const std::vector<std::vector<Item>>& owned, int n) {
    Allocation a;
    a.bundles.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) a.bundles.emplace_back(owned[static_cast<size_t>(k)]);
    return a;
}

// Cut tuples 0 <= r_1 <= ... <= r_{n-1} <= m in lexicographic order.
bool walk_well_ordered(int n, int m, const std::function<bool(const Allocation&)>& visit,
                       long long& visited) {
    std::vector<int> r(static_cast<size_t>(n) + 1, 0);
    r[static_cast<size_t>(n)] = m;
    while (true) {
        Allocation a;
        a.bundles.reserve(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j)
            a.bundles.emplace_back(interval_items(r[static_cast<size_t>(j) - 1], r[static_cast<size_t>(j)]));
        ++visited;
        if (!visit(a)) return false;

        int j = n - 1;
        while (j >= 1 && r[static_cast<size_t>(j)] == m) --j;
        if (j < 1) return true;
        ++r[static_cast<size_t>(j)];
        for (int h = j + 1; h <= n - 1; ++h) r[static_cast<size_t>(h)] = r[static_cast<size_t>(j)];
    }
}

// Distinct connected allocations: k nonempty intervals tiling the path,
// handed to k distinct agents; everyone else gets nothing. Ordered by k, then
// by the cut set, then by the agent tuple, all lexicographic.
bool walk_connected(int n, int m, const std::function<bool(const Allocation&)>& visit,
                    long long& visited) {
    if (m == 0) {
        ++visited;
        return visit(from_owned(std::vector<std::vector<Item>>(static_cast<size_t>(n) + 1), n));
    }
    for (int k = 1; k <= std::min(n, m); ++k) {
        // cuts[1..k-1] strictly increasing in 1..m-1; interval h spans
        // cuts[h-1]+1 .. cuts[h] with cuts[0] = 0, cuts[k] = m.
        std::vector<int> cuts(static_cast<size_t>(k) + 1, 0);
        cuts[static_cast<size_t>(k)] = m;
        for (int h = 1; h < k; ++h) cuts[static_cast<size_t>(h)] = h;
        while (true) {
            std::vector<Interval> parts(static_cast<size_t>(k));
            for (int h = 1; h <= k; ++h)
                parts[static_cast<size_t>(h) - 1] =
                    interval_items(cuts[static_cast<size_t>(h) - 1], cuts[static_cast<size_t>(h)]);

            // owners[h] = agent receiving interval h, all distinct.
            std::vector<Agent> owners(static_cast<size_t>(k), 0);
            std::vector<char> used(static_cast<size_t>(n) + 1, 0);
            int depth = 0;
            while (depth >= 0) {
                if (depth == k) {
                    Allocation a;
                    a.bundles.assign(static_cast<size_t>(n), Bundle{});
                    for (int h = 0; h < k; ++h)
                        a.bundles[static_cast<size_t>(owners[static_cast<size_t>(h)]) - 1] =
                            Bundle(parts[static_cast<size_t>(h)]);
                    ++visited;
                    if (!visit(a)) return false;
                    --depth;
                    continue;
                }
                Agent& cur = owners[static_cast<size_t>(depth)];
                if (cur != 0) used[static_cast<size_t>(cur)] = 0;
                ++cur;
                while (cur <= n && used[static_cast<size_t>(cur)]) ++cur;
                if (cur > n) {
                    cur = 0;
                    --depth;
                    continue;
                }
                used[static_cast<size_t>(cur)] = 1;
                ++depth;
            }

            int h = k - 1;
            while (h >= 1 && cuts[static_cast<size_t>(h)] == m - (k - h)) --h;
            if (h < 1) break;
            ++cuts[static_cast<size_t>(h)];
            for (int g = h + 1; g < k; ++g)
                cuts[static_cast<size_t>(g)] = cuts[static_cast<size_t>(g) - 1] + 1;
        }
    }
    return true;
}

// Every map items -> agents, item 1 as the most significant digit.
bool walk_all(int n, int m, const std::function<bool(const Allocation&)>& visit,
              long long& visited) {
    std::vector<Agent> assign(static_cast<size_t>(m) + 1, 1);
    while (true) {
        std::vector<std::vector<Item>> owned(static_cast<size_t>(n) + 1);
        for (Item x = 1; x <= m; ++x) owned[static_cast<size_t>(assign[static_cast<size_t>(x)])].push_back(x);
        ++visited;
        if (!visit(from_owned(owned, n))) return false;

        Item x = m;
        while (x >= 1 && assign[static_cast<size_t>(x)] == n) --x;
        if (x < 1) return true;
        ++assign[static_cast<size_t>(x)];
        for (Item y = x + 1; y <= m; ++y) assign[static_cast<size_t>(y)] = 1;
    }
}

}  // namespace

std::string scope_name(EnumerationScope scope) {
    switch (scope) {
        case EnumerationScope::WellOrderedConnected: return "well-ordered";
        case EnumerationScope::Connected: return "connected";
        case EnumerationScope::All: return "all";
    }
    return "";
}

std::optional<EnumerationScope> scope_from_name(const std::string& name) {
    if (name == "well-ordered") return EnumerationScope::WellOrderedConnected;
    if (name == "connected") return EnumerationScope::Connected;
    if (name == "all") return EnumerationScope::All;
    return std::nullopt;
}

long long scope_size_bound(int n, int m, EnumerationScope scope) {
    switch (scope) {
        case EnumerationScope::WellOrderedConnected:
            return binomial_capped(m + n - 1, n - 1);
        case EnumerationScope::Connected: {
            long long r = binomial_capped(m + n - 1, n - 1);
            for (int k = 2; k <= n; ++k) r = mul_capped(r, k);
            return r;
        }
        case EnumerationScope::All: {
            long long r = 1;
            for (int x = 0; x < m; ++x) r = mul_capped(r, n);
            return r;
        }
    }
    return 0;
}

long long enumerate_allocations(int n, int m, EnumerationScope scope,
                                const std::function<bool(const Allocation&)>& visit,
                                long long budget) {
    if (scope_size_bound(n, m, scope) > budget)
        throw BudgetExceeded("allocation scope exceeds the enumeration budget");
    long long visited = 0;
    switch (scope) {
        case EnumerationScope::WellOrderedConnected:
            walk_well_ordered(n, m, visit, visited);
            break;
        case EnumerationScope::Connected:
            walk_connected(n, m, visit, visited);
            break;
        case EnumerationScope::All:
            walk_all(n, m, visit, visited);
            break;
    }
    return visited;
}

OracleResult exists_satisfying(const Instance& inst, FairnessNotion notion,
                               EnumerationScope scope, long long budget) {
    OracleResult res;
    res.examined = 0;
    enumerate_allocations(
        inst.n, inst.m, scope,
        [&](const Allocation& a) {
            ++res.examined;
            if (check(inst, a, notion).holds) {
                res.exists = true;
                res.witness = a;
                return false;
            }
            return true;
        },
        budget);
    return res;
}

}  // namespace fairdiv
