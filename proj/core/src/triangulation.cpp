#include "fairdiv/triangulation.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>

namespace fairdiv {

std::vector<SimplexVertex> ElementarySimplex::vertices() const {
    std::vector<SimplexVertex> out;
    out.reserve(pi.size() + 1);
    out.push_back(base);
    SimplexVertex cur = base;
    for (int knife : pi) {
        cur.u[static_cast<size_t>(knife) - 1] += 1;
        out.push_back(cur);
    }
    return out;
}

long long Triangulation::simplex_count() const {
    const long long step = 3LL * m;
    long long count = 1;
    for (int k = 1; k < n; ++k) {
        if (step != 0 && count > std::numeric_limits<long long>::max() / step)
            return std::numeric_limits<long long>::max();  // saturate, callers compare to budgets
        count *= step;
    }
    return count;
}

long long Triangulation::vertex_count() const {
    // C(3m + n - 1, n - 1)
    long long num = 1;
    for (int k = 1; k <= n - 1; ++k) num = num * (3LL * m + k) / k;
    return num;
}

bool Triangulation::valid_vertex(const SimplexVertex& v) const {
    if (static_cast<int>(v.u.size()) != n - 1) return false;
    int prev = 0;
    for (int x : v.u) {
        if (x < prev || x > scaled_max()) return false;
        prev = x;
    }
    return true;
}

std::vector<int> Triangulation::faces(const SimplexVertex& v) const {
    std::vector<int> out;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        int cur = (i == n) ? scaled_max() : v.u[static_cast<size_t>(i) - 1];
        if (cur == prev) out.push_back(i);
        prev = cur;
    }
    return out;
}

namespace {

void gen_vertices(int n, int cap, int pos, std::vector<int>& u, std::vector<SimplexVertex>& out) {
    if (pos == n - 1) {
        out.push_back(SimplexVertex{u});
        return;
    }
    int lo = pos == 0 ? 0 : u[static_cast<size_t>(pos) - 1];
    for (int x = lo; x <= cap; ++x) {
        u[static_cast<size_t>(pos)] = x;
        gen_vertices(n, cap, pos + 1, u, out);
    }
}

}  // namespace

std::vector<SimplexVertex> Triangulation::all_vertices() const {
    std::vector<SimplexVertex> out;
    std::vector<int> u(static_cast<size_t>(n) - 1, 0);
    gen_vertices(n, scaled_max(), 0, u, out);
    return out;
}

long long Triangulation::for_each_simplex(
    const std::function<bool(const ElementarySimplex&)>& visit) const {
    long long visited = 0;
    std::vector<int> knives(static_cast<size_t>(n) - 1);
    std::iota(knives.begin(), knives.end(), 1);

    for (const SimplexVertex& base : all_vertices()) {
        std::vector<int> pi = knives;
        do {
            // Walk the cell; every intermediate vertex must stay inside the
            // ordered simplex, otherwise this (base, pi) names no cell.
            SimplexVertex cur = base;
            bool ok = true;
            for (int knife : pi) {
                size_t h = static_cast<size_t>(knife) - 1;
                cur.u[h] += 1;
                int right = (knife == n - 1) ? scaled_max() : cur.u[h + 1];
                if (cur.u[h] > right) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            ++visited;
            if (!visit(ElementarySimplex{base, pi})) return visited;
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    return visited;
}

FractionalBundle fractional_bundle(const Triangulation& t, const SimplexVertex& v, int j) {
    int lo = (j == 1) ? 0 : v.u[static_cast<size_t>(j) - 2];
    int hi = (j == t.n) ? t.scaled_max() : v.u[static_cast<size_t>(j) - 1];
    return FractionalBundle{lo, hi};
}

std::vector<FractionalBundle> fractional_allocation(const Triangulation& t,
                                                    const SimplexVertex& v) {
    std::vector<FractionalBundle> out;
    out.reserve(static_cast<size_t>(t.n));
    for (int j = 1; j <= t.n; ++j) out.push_back(fractional_bundle(t, v, j));
    return out;
}

long long virtual_value(const Instance& inst, Agent i, const FractionalBundle& fb) {
    if (fb.empty()) return 0;
    int m = inst.m;
    int a_minus = fb.lo / 3;
    int a_plus = std::min(fb.lo / 3 + 1, m);
    int b_minus = fb.hi / 3;
    int b_plus = std::min(fb.hi / 3 + 1, m);
    switch (fb.lo % 3) {
        case 0:
            return inst.value(i, interval_items(a_minus, b_minus));
        case 1: {
            long long c0 = inst.value(i, interval_items(a_minus, b_minus));
            long long c1 = inst.value(i, interval_items(a_plus, b_minus));
            long long c2 = inst.value(i, interval_items(a_plus, b_plus));
            long long lo = std::min({c0, c1, c2});
            long long hi = std::max({c0, c1, c2});
            return c0 + c1 + c2 - lo - hi;  // the middle one
        }
        default:
            return inst.value(i, interval_items(a_plus, b_minus));
    }
}

size_t VertexKeyHash::operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<size_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// Shared argmax walk: returns either the single winner (ties resolved toward
// non-empty bundles, then the lowest index) or the whole argmax set.
int argmax_single(const Instance& inst, const Triangulation& t, Agent viewer_or_self,
                  const SimplexVertex& v, bool equity) {
    int best = 0;
    long long best_value = 0;
    bool best_nonempty = false;
    for (int j = 1; j <= t.n; ++j) {
        FractionalBundle fb = fractional_bundle(t, v, j);
        Agent viewer = equity ? j : viewer_or_self;
        long long val = virtual_value(inst, viewer, fb);
        bool nonempty = !fb.empty();
        if (best == 0 || val > best_value ||
            (val == best_value && nonempty && !best_nonempty)) {
            best = j;
            best_value = val;
            best_nonempty = nonempty;
        }
    }
    return best;
}

ColorSet argmax_set(const Instance& inst, const Triangulation& t, Agent viewer_or_self,
                    const SimplexVertex& v, bool equity) {
    long long best_value = 0;
    bool have = false;
    std::vector<long long> vals(static_cast<size_t>(t.n) + 1, 0);
    for (int j = 1; j <= t.n; ++j) {
        Agent viewer = equity ? j : viewer_or_self;
        vals[static_cast<size_t>(j)] = virtual_value(inst, viewer, fractional_bundle(t, v, j));
        if (!have || vals[static_cast<size_t>(j)] > best_value) {
            best_value = vals[static_cast<size_t>(j)];
            have = true;
        }
    }
    ColorSet set = 0;
    for (int j = 1; j <= t.n; ++j)
        if (vals[static_cast<size_t>(j)] == best_value) set |= (1u << (j - 1));
    return set;
}

}  // namespace

Coloring coloring_equity(const Triangulation& t, Instance inst) {
    return Coloring([t, inst = std::move(inst)](const SimplexVertex& v) {
        return argmax_single(inst, t, 0, v, true);
    });
}

Coloring coloring_envy(const Triangulation& t, Instance inst, Agent viewer) {
    return Coloring([t, inst = std::move(inst), viewer](const SimplexVertex& v) {
        return argmax_single(inst, t, viewer, v, false);
    });
}

MultiColoring multicoloring_equity(const Triangulation& t, Instance inst) {
    return MultiColoring([t, inst = std::move(inst)](const SimplexVertex& v) {
        return argmax_set(inst, t, 0, v, true);
    });
}

MultiColoring multicoloring_envy(const Triangulation& t, Instance inst, Agent viewer) {
    return MultiColoring([t, inst = std::move(inst), viewer](const SimplexVertex& v) {
        return argmax_set(inst, t, viewer, v, false);
    });
}

bool is_special(const Triangulation& t, const Coloring& col) {
    for (const SimplexVertex& v : t.all_vertices()) {
        int c = col(v);
        for (int face : t.faces(v))
            if (c == face) return false;
    }
    return true;
}

bool is_special(const Triangulation& t, const MultiColoring& col) {
    for (const SimplexVertex& v : t.all_vertices()) {
        ColorSet set = col(v);
        for (int face : t.faces(v))
            if (!(set & (1u << (face - 1)))) return false;
    }
    return true;
}

std::optional<FullyColoredHit> find_fully_colored(const Triangulation& t, const Coloring& col) {
    std::optional<FullyColoredHit> hit;
    long long scanned = 0;
    t.for_each_simplex([&](const ElementarySimplex& s) {
        ++scanned;
        std::vector<int> sigma(static_cast<size_t>(t.n), 0);
        bool full = true;
        int pos = 0;
        for (const SimplexVertex& v : s.vertices()) {
            ++pos;
            int c = col(v);
            if (sigma[static_cast<size_t>(c) - 1] != 0) {
                full = false;
                break;
            }
            sigma[static_cast<size_t>(c) - 1] = pos;
        }
        if (full) {
            hit = FullyColoredHit{s, std::move(sigma), scanned};
            return false;
        }
        return true;
    });
    return hit;
}

long long count_fully_colored(const Triangulation& t, const Coloring& col) {
    long long count = 0;
    t.for_each_simplex([&](const ElementarySimplex& s) {
        std::vector<bool> seen(static_cast<size_t>(t.n) + 1, false);
        bool full = true;
        for (const SimplexVertex& v : s.vertices()) {
            int c = col(v);
            if (seen[static_cast<size_t>(c)]) {
                full = false;
                break;
            }
            seen[static_cast<size_t>(c)] = true;
        }
        if (full) ++count;
        return true;
    });
    return count;
}

std::optional<JointHit> find_jointly_fully_colored(const Triangulation& t,
                                                   const std::vector<Coloring>& cols) {
    if (static_cast<int>(cols.size()) != t.n)
        throw std::invalid_argument("need one coloring per agent");
    std::optional<JointHit> hit;
    long long scanned = 0;

    std::vector<int> sigma_positions(static_cast<size_t>(t.n));
    std::iota(sigma_positions.begin(), sigma_positions.end(), 1);

    t.for_each_simplex([&](const ElementarySimplex& s) {
        ++scanned;
        std::vector<SimplexVertex> verts = s.vertices();
        // Try assignments of colorings to vertex positions in lexicographic
        // order; accept the first whose observed colors form a permutation.
        std::vector<int> sigma = sigma_positions;
        do {
            std::vector<int> tau(static_cast<size_t>(t.n), 0);
            std::vector<bool> used(static_cast<size_t>(t.n) + 1, false);
            bool ok = true;
            for (int i = 1; i <= t.n; ++i) {
                int pos = sigma[static_cast<size_t>(i) - 1];
                int c = cols[static_cast<size_t>(i) - 1](verts[static_cast<size_t>(pos) - 1]);
                if (used[static_cast<size_t>(c)]) {
                    ok = false;
                    break;
                }
                used[static_cast<size_t>(c)] = true;
                tau[static_cast<size_t>(i) - 1] = c;
            }
            if (ok) {
                hit = JointHit{s, sigma, std::move(tau), scanned};
                return false;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return true;
    });
    return hit;
}

Coloring minimal_restriction(const Triangulation&, const MultiColoring& col) {
    return Coloring([col](const SimplexVertex& v) {
        ColorSet set = col(v);
        if (set == 0) throw NotSpecial("empty color set");
        int c = 1;
        while (!(set & 1u)) {
            set >>= 1;
            ++c;
        }
        return c;
    });
}

MultiColoring normalize_multicoloring(const Triangulation& t, const MultiColoring& col) {
    // Eager: validates specialness over the whole vertex set and freezes the
    // normalized sets into a table.
    auto table = std::make_shared<std::unordered_map<std::vector<int>, ColorSet, VertexKeyHash>>();
    for (const SimplexVertex& v : t.all_vertices()) {
        ColorSet set = col(v);
        std::vector<int> faces = t.faces(v);
        ColorSet face_set = 0;
        for (int f : faces) face_set |= (1u << (f - 1));
        if ((set & face_set) != face_set)
            throw NotSpecial("multi-coloring misses a face color");
        if (set == 0) throw NotSpecial("empty color set");
        ColorSet out;
        if (face_set != 0) {
            out = face_set;  // boundary: exactly the face indices
        } else {
            ColorSet low = set & ~(set - 1);  // lowest set bit: min color
            out = low;
        }
        table->emplace(v.u, out);
    }
    return MultiColoring([table](const SimplexVertex& v) {
        auto it = table->find(v.u);
        if (it == table->end()) throw std::invalid_argument("vertex outside triangulation");
        return it->second;
    });
}

namespace {

// Can colors 1..n be matched to distinct vertex positions whose sets contain
// them? Kuhn's augmenting-path matching over an n x n bipartite graph.
bool sdr_matching(int n, const std::vector<ColorSet>& vertex_sets, std::vector<int>& color_to_pos) {
    color_to_pos.assign(static_cast<size_t>(n), 0);
    std::vector<int> pos_to_color(static_cast<size_t>(n) + 1, 0);

    std::function<bool(int, std::vector<bool>&)> augment = [&](int color,
                                                               std::vector<bool>& visited) {
        for (int pos = 1; pos <= n; ++pos) {
            if (visited[static_cast<size_t>(pos)]) continue;
            if (!(vertex_sets[static_cast<size_t>(pos) - 1] & (1u << (color - 1)))) continue;
            visited[static_cast<size_t>(pos)] = true;
            if (pos_to_color[static_cast<size_t>(pos)] == 0 ||
                augment(pos_to_color[static_cast<size_t>(pos)], visited)) {
                pos_to_color[static_cast<size_t>(pos)] = color;
                color_to_pos[static_cast<size_t>(color) - 1] = pos;
                return true;
            }
        }
        return false;
    };

    for (int color = 1; color <= n; ++color) {
        std::vector<bool> visited(static_cast<size_t>(n) + 1, false);
        if (!augment(color, visited)) return false;
    }
    return true;
}

}  // namespace

std::optional<FullyColoredHit> find_fully_colored_multi(const Triangulation& t,
                                                        const MultiColoring& col) {
    std::optional<FullyColoredHit> hit;
    long long scanned = 0;
    t.for_each_simplex([&](const ElementarySimplex& s) {
        ++scanned;
        std::vector<ColorSet> sets;
        sets.reserve(static_cast<size_t>(t.n));
        for (const SimplexVertex& v : s.vertices()) sets.push_back(col(v));
        std::vector<int> sigma;
        if (sdr_matching(t.n, sets, sigma)) {
            hit = FullyColoredHit{s, std::move(sigma), scanned};
            return false;
        }
        return true;
    });
    return hit;
}

long long count_fully_colored_multi(const Triangulation& t, const MultiColoring& col) {
    long long count = 0;
    t.for_each_simplex([&](const ElementarySimplex& s) {
        std::vector<ColorSet> sets;
        sets.reserve(static_cast<size_t>(t.n));
        for (const SimplexVertex& v : s.vertices()) sets.push_back(col(v));
        std::vector<int> sigma;
        if (sdr_matching(t.n, sets, sigma)) ++count;
        return true;
    });
    return count;
}

int distance_color_phi(const SimplexVertex& v, int n) {
    long long sum = 0;
    for (int x : v.u) sum += x;
    return 1 + static_cast<int>(sum % n);
}

std::optional<JointHit> find_jointly_fully_colored_multi(const Triangulation& t,
                                                         const std::vector<MultiColoring>& cols) {
    if (static_cast<int>(cols.size()) != t.n)
        throw std::invalid_argument("need one multi-coloring per agent");
    for (const MultiColoring& col : cols)
        if (!is_special(t, col)) throw NotSpecial("input multi-coloring is not special");

    // Aggregate: read vertex x with the multi-coloring its phi index names.
    // Each input is special, so the aggregate is special too.
    MultiColoring aggregated([&cols, n = t.n](const SimplexVertex& v) {
        return cols[static_cast<size_t>(distance_color_phi(v, n)) - 1](v);
    });

    std::optional<FullyColoredHit> hit = find_fully_colored_multi(t, aggregated);
    if (!hit) return std::nullopt;

    std::vector<SimplexVertex> verts = hit->simplex.vertices();
    // sigma: which vertex position was read with multi-coloring i. The walk
    // raises the coordinate sum by one per step, so phi is distinct across
    // the cell's vertices.
    std::vector<int> sigma(static_cast<size_t>(t.n), 0);
    for (int pos = 1; pos <= t.n; ++pos) {
        int i = distance_color_phi(verts[static_cast<size_t>(pos) - 1], t.n);
        if (sigma[static_cast<size_t>(i) - 1] != 0)
            throw InternalInvariantViolation("phi collided inside one cell");
        sigma[static_cast<size_t>(i) - 1] = pos;
    }
    // tau(i): the color the SDR put on sigma(i)'s position.
    std::vector<int> pos_color(static_cast<size_t>(t.n) + 1, 0);
    for (int c = 1; c <= t.n; ++c) pos_color[static_cast<size_t>(hit->sigma[static_cast<size_t>(c) - 1])] = c;
    std::vector<int> tau(static_cast<size_t>(t.n), 0);
    for (int i = 1; i <= t.n; ++i)
        tau[static_cast<size_t>(i) - 1] = pos_color[static_cast<size_t>(sigma[static_cast<size_t>(i) - 1])];

    return JointHit{hit->simplex, std::move(sigma), std::move(tau), hit->scanned};
}

MoveOrder bundle_move_order(const Triangulation& t, const ElementarySimplex& s, int j) {
    if (j == 1) return MoveOrder::RightFirst;
    if (j == t.n) return MoveOrder::LeftFirst;
    for (int knife : s.pi) {
        if (knife == j - 1) return MoveOrder::LeftFirst;
        if (knife == j) return MoveOrder::RightFirst;
    }
    throw InternalInvariantViolation("knife order misses a knife");
}

}  // namespace fairdiv
