#include "fairdiv/random_instances.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t vertex_hash(std::uint64_t seed, const std::vector<int>& u) {
    std::uint64_t h = splitmix64(seed);
    for (int c : u) h = splitmix64(h ^ static_cast<std::uint64_t>(c + 1));
    return h;
}

}  // namespace

long long Rng::below(long long bound) {
    const auto span = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<long long>(x % span);
}

long long Rng::between(long long lo, long long hi) { return lo + below(hi - lo + 1); }

std::string sign_class_name(SignClass cls) {
    switch (cls) {
        case SignClass::NonNegative: return "non-negative";
        case SignClass::NonPositive: return "non-positive";
        case SignClass::Objective: return "objective";
    }
    return "";
}

std::optional<SignClass> sign_class_from_name(const std::string& name) {
    if (name == "non-negative") return SignClass::NonNegative;
    if (name == "non-positive") return SignClass::NonPositive;
    if (name == "objective") return SignClass::Objective;
    return std::nullopt;
}

Instance random_additive_instance(Rng& rng, int n, int m, SignClass cls, long long magnitude) {
    std::vector<int> sign(static_cast<size_t>(m), 1);
    if (cls == SignClass::NonPositive)
        sign.assign(static_cast<size_t>(m), -1);
    else if (cls == SignClass::Objective)
        for (auto& s : sign) s = rng.below(2) == 0 ? 1 : -1;

    std::vector<std::vector<long long>> values(static_cast<size_t>(n));
    for (auto& row : values) {
        row.resize(static_cast<size_t>(m));
        for (int x = 0; x < m; ++x)
            row[static_cast<size_t>(x)] = sign[static_cast<size_t>(x)] * rng.between(0, magnitude);
    }
    return {n, m, Valuation::additive(std::move(values))};
}

Instance random_interval_instance(Rng& rng, int n, int m, SignClass cls, long long magnitude) {
    if (cls == SignClass::Objective)
        throw WrongValuationClass("interval tables have no global good/chore split to respect");
    const long long flip = cls == SignClass::NonPositive ? -1 : 1;
    std::vector<std::vector<std::vector<long long>>> table(static_cast<size_t>(n));
    for (auto& per_agent : table) {
        per_agent.resize(static_cast<size_t>(m));
        for (int s = 1; s <= m; ++s) {
            auto& row = per_agent[static_cast<size_t>(s) - 1];
            row.resize(static_cast<size_t>(m - s) + 1);
            for (auto& cell : row) cell = flip * rng.between(0, magnitude);
        }
    }
    return {n, m, Valuation::interval_table(std::move(table))};
}

Instance random_subset_instance(Rng& rng, int n, int m, SignClass cls, long long magnitude) {
    const std::uint32_t full = m == 0 ? 0u : (1u << m) - 1u;
    std::vector<std::vector<long long>> tables(static_cast<size_t>(n),
                                               std::vector<long long>(static_cast<size_t>(full) + 1, 0));

    if (cls != SignClass::Objective) {
        const long long flip = cls == SignClass::NonPositive ? -1 : 1;
        for (auto& table : tables)
            for (std::uint32_t s = 1; s <= full; ++s)
                table[s] = flip * rng.between(0, magnitude);
        return {n, m, Valuation::subset_table(std::move(tables))};
    }

    std::uint32_t good_mask = 0;
    for (int x = 0; x < m; ++x)
        if (rng.below(2) == 0) good_mask |= 1u << x;

    // Monotone part per agent: value grows by a small step over the best
    // dropped item, capped so magnitudes stay in range; chores mirror it
    // downward. Marginals then keep one sign globally.
    for (auto& table : tables) {
        std::vector<long long> grow(static_cast<size_t>(full) + 1, 0);
        std::vector<long long> shrink(static_cast<size_t>(full) + 1, 0);
        for (std::uint32_t s = 1; s <= full; ++s) {
            if ((s & good_mask) == s) {
                long long base = 0;
                for (int x = 0; x < m; ++x)
                    if (s & (1u << x)) base = std::max(base, grow[s & ~(1u << x)]);
                grow[s] = std::min(magnitude, base + rng.between(0, 2));
            } else if ((s & ~good_mask) == s) {
                long long base = 0;
                for (int x = 0; x < m; ++x)
                    if (s & (1u << x)) base = std::min(base, shrink[s & ~(1u << x)]);
                shrink[s] = std::max(-magnitude, base - rng.between(0, 2));
            }
        }
        for (std::uint32_t s = 0; s <= full; ++s)
            table[s] = grow[s & good_mask] + shrink[s & ~good_mask];
    }
    return {n, m, Valuation::subset_table(std::move(tables))};
}

Coloring random_special_coloring(const Triangulation& t, std::uint64_t seed) {
    Triangulation tri = t;
    return Coloring([tri, seed](const SimplexVertex& v) {
        std::vector<int> allowed;
        std::vector<int> banned = tri.faces(v);
        for (int c = 1; c <= tri.n; ++c)
            if (std::find(banned.begin(), banned.end(), c) == banned.end()) allowed.push_back(c);
        const std::uint64_t h = vertex_hash(seed, v.u);
        return allowed[static_cast<size_t>(h % allowed.size())];
    });
}

MultiColoring random_normalized_special_multicoloring(const Triangulation& t, std::uint64_t seed) {
    Triangulation tri = t;
    return MultiColoring([tri, seed](const SimplexVertex& v) {
        std::vector<int> on = tri.faces(v);
        if (!on.empty()) {
            ColorSet set = 0;
            for (int c : on) set |= ColorSet{1} << (c - 1);
            return set;
        }
        const std::uint64_t h = vertex_hash(seed, v.u);
        return ColorSet{1} << (h % static_cast<std::uint64_t>(tri.n));
    });
}

}  // namespace fairdiv
