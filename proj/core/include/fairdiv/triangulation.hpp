#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

// The search space for connected division with n agents over m items is the
// simplex 0 <= x_1 <= ... <= x_{n-1} <= m of knife positions, triangulated on
// a third-integral grid. Coordinates are stored scaled by 3, so every vertex
// is an integer vector u with 0 <= u_1 <= ... <= u_{n-1} <= 3m and knife h
// sits at u_h / 3. Implicit u_0 = 0 and u_n = 3m close off the bundles.
struct SimplexVertex {
    std::vector<int> u;  // n-1 scaled knife positions

    bool operator==(const SimplexVertex&) const = default;
};

// Elementary cell of the Kuhn triangulation: a base vertex plus a knife order.
// Vertex k+1 adds one grid step to knife pi[k] of vertex k, so the n vertices
// are base, base + e(pi[0])/3, base + e(pi[0])/3 + e(pi[1])/3, ...
struct ElementarySimplex {
    SimplexVertex base;
    std::vector<int> pi;  // permutation of knives 1..n-1, applied in order

    std::vector<SimplexVertex> vertices() const;
};

struct Triangulation {
    int n = 0;  // agents (n >= 2 for a nondegenerate simplex)
    int m = 0;  // items (m >= 1)

    int scaled_max() const { return 3 * m; }
    long long simplex_count() const;  // (3m)^(n-1)
    long long vertex_count() const;   // C(3m + n - 1, n - 1)

    bool valid_vertex(const SimplexVertex& v) const;
    // Face indices i with u_{i-1} == u_i (u_0 = 0, u_n = 3m). A vertex on
    // F_i has knife i-1 and knife i coincide, i.e. bundle i is degenerate.
    std::vector<int> faces(const SimplexVertex& v) const;

    std::vector<SimplexVertex> all_vertices() const;  // lexicographic

    // Visits elementary simplices in lexicographic (base, pi) order; the
    // visitor returns false to stop early. Returns the number visited.
    long long for_each_simplex(const std::function<bool(const ElementarySimplex&)>& visit) const;
};

// Fractional bundle [a, b] in scaled coordinates (a = lo/3, b = hi/3).
struct FractionalBundle {
    int lo = 0;
    int hi = 0;

    bool empty() const { return lo == hi; }
};

// Bundle j of a vertex: the span between knives j-1 and j.
FractionalBundle fractional_bundle(const Triangulation& t, const SimplexVertex& v, int j);
std::vector<FractionalBundle> fractional_allocation(const Triangulation& t, const SimplexVertex& v);

// Value of a fractional bundle: exact when both ends are integral, otherwise
// the nearest whole-item readings vote. With a = lo/3, floor a- and ceiling
// a+ = min(floor+1, m):
//   left end integral: value of items (a, b-];
//   left end at 1/3:   middle of { v(a-,b-], v(a+,b-], v(a+,b+] };
//   left end at 2/3:   value of items (a+, b-].
// All ranges are half-open cut ranges; empty fractional bundles give 0.
long long virtual_value(const Instance& inst, Agent i, const FractionalBundle& fb);

// Color sets for multi-colorings: bit c-1 set means color c is present.
using ColorSet = std::uint32_t;

struct VertexKeyHash {
    size_t operator()(const std::vector<int>& v) const;
};

// Memoized pure function of a vertex.
template <typename V>
class VertexFunction {
  public:
    using Fn = std::function<V(const SimplexVertex&)>;

    explicit VertexFunction(Fn fn) : fn_(std::move(fn)) {}

    V operator()(const SimplexVertex& v) const {
        auto it = memo_.find(v.u);
        if (it != memo_.end()) return it->second;
        V value = fn_(v);
        memo_.emplace(v.u, value);
        return value;
    }

  private:
    Fn fn_;
    mutable std::unordered_map<std::vector<int>, V, VertexKeyHash> memo_;
};

using Coloring = VertexFunction<int>;
using MultiColoring = VertexFunction<ColorSet>;

// Single color: the bundle its own agent likes best (equity) or the bundle
// agent `viewer` likes best (envy), by virtual value. Ties prefer non-empty
// fractional bundles, then the lowest index. Both are special on non-negative
// instances: on F_i bundle i is degenerate so some other bundle wins.
Coloring coloring_equity(const Triangulation& t, Instance inst);
Coloring coloring_envy(const Triangulation& t, Instance inst, Agent viewer);

// Full argmax sets, used for non-positive instances where the single-color
// rule would not be special.
MultiColoring multicoloring_equity(const Triangulation& t, Instance inst);
MultiColoring multicoloring_envy(const Triangulation& t, Instance inst, Agent viewer);

// A coloring is special when color i never appears on face F_i; a
// multi-coloring when every vertex's set contains all its face indices.
bool is_special(const Triangulation& t, const Coloring& col);
bool is_special(const Triangulation& t, const MultiColoring& col);

struct FullyColoredHit {
    ElementarySimplex simplex;
    // sigma[c-1] = 1-based vertex position carrying color c (for multi
    // searches: a position whose color set contains c; positions distinct).
    std::vector<int> sigma;
    long long scanned = 0;  // simplices inspected up to and including the hit
};

struct JointHit {
    ElementarySimplex simplex;
    std::vector<int> sigma;  // sigma[i-1] = vertex position read with coloring i
    std::vector<int> tau;    // tau[i-1] = color seen there; a permutation
    long long scanned = 0;
};

// First simplex whose n vertices carry n distinct colors. Empty only for
// non-special colorings.
std::optional<FullyColoredHit> find_fully_colored(const Triangulation& t, const Coloring& col);
long long count_fully_colored(const Triangulation& t, const Coloring& col);

// First simplex where the n per-agent colorings can be read at n distinct
// vertices so that the colors seen form a permutation: L_i(x_{sigma(i)}) =
// tau(i).
std::optional<JointHit> find_jointly_fully_colored(const Triangulation& t,
                                                   const std::vector<Coloring>& cols);

// Multi-coloring machinery. minimal_restriction picks min of each color set;
// normalize pins boundary vertices to exactly their face sets and interior
// vertices to their minimum, preserving specialness and fully-colored cells.
Coloring minimal_restriction(const Triangulation& t, const MultiColoring& col);
MultiColoring normalize_multicoloring(const Triangulation& t, const MultiColoring& col);

// First simplex admitting a system of distinct representatives: distinct
// vertices covering all n colors. Decided per simplex by bipartite matching.
std::optional<FullyColoredHit> find_fully_colored_multi(const Triangulation& t,
                                                        const MultiColoring& col);
long long count_fully_colored_multi(const Triangulation& t, const MultiColoring& col);

// Distance coloring used to aggregate n multi-colorings into one: vertex x
// gets index 1 + (sum of scaled coordinates mod n). The n vertices of an
// elementary simplex always receive n distinct indices.
int distance_color_phi(const SimplexVertex& v, int n);

// Aggregated search over n per-agent multi-colorings: each vertex of the hit
// simplex is read with the multi-coloring its phi index selects, giving
// tau(i) in L_i(x_{sigma(i)}) with tau a permutation.
std::optional<JointHit> find_jointly_fully_colored_multi(const Triangulation& t,
                                                         const std::vector<MultiColoring>& cols);

enum class MoveOrder { LeftFirst, RightFirst };

// Which border knife of bundle j moves first along the simplex walk. Bundle 1
// has its left knife pinned at 0 (right first); bundle n its right knife at m
// (left first); interior bundles follow the order of knives j-1 and j in pi.
MoveOrder bundle_move_order(const Triangulation& t, const ElementarySimplex& s, int j);

}  // namespace fairdiv
