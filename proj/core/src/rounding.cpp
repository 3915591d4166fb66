#include "fairdiv/rounding.hpp"

#include <algorithm>

namespace fairdiv {

std::vector<Interval> round_main_allocation(const Triangulation& t, const ElementarySimplex& s) {
    int n = t.n, m = t.m;
    std::vector<Interval> out(static_cast<size_t>(n));

    // r: left cut of the most recently assigned bundle; items r+1..m are
    // already handed out. "b+ was handed out" is then just b+ > r, which
    // matches comparing against the next non-empty bundle's first item and
    // stays correct when intervening bundles round to empty.
    int r = m;
    for (int j = n; j >= 1; --j) {
        int lo = (j == 1) ? 0 : s.base.u[static_cast<size_t>(j) - 2];
        int hi = (j == n) ? 3 * m : s.base.u[static_cast<size_t>(j) - 1];
        int am = lo % 3, bm = hi % 3;
        int a_minus = lo / 3, a_plus = std::min(lo / 3 + 1, m);
        int b_minus = hi / 3, b_plus = std::min(hi / 3 + 1, m);
        bool taken = b_plus > r;
        if (j == n && bm != 0)
            throw InternalInvariantViolation("rightmost knife must be integral");

        int p = 0, q = 0;
        switch (am * 3 + bm) {
            case 0: p = a_minus; q = b_minus; break;               // a=0, b=0
            case 1:                                                // a=0, b=1/3
                p = a_minus; q = taken ? b_minus : b_plus; break;
            case 2: p = a_minus; q = b_plus; break;                // a=0, b=2/3
            case 3: p = a_minus; q = b_minus; break;               // a=1/3, b=0
            case 4:                                                // a=1/3, b=1/3
                if (taken) { p = a_minus; q = b_minus; }
                else { p = a_plus; q = b_plus; }
                break;
            case 5:                                                // a=1/3, b=2/3
                p = (bundle_move_order(t, s, j) == MoveOrder::LeftFirst) ? a_plus : a_minus;
                q = b_plus;
                break;
            case 6: p = a_plus; q = b_minus; break;                // a=2/3, b=0
            case 7:                                                // a=2/3, b=1/3
                p = a_plus; q = taken ? b_minus : b_plus; break;
            case 8: p = a_plus; q = b_plus; break;                 // a=2/3, b=2/3
        }

        if (q != r)
            throw InternalInvariantViolation("rounded bundles do not tile the path");
        out[static_cast<size_t>(j) - 1] = interval_items(p, q);
        r = p;
    }
    if (r != 0) throw InternalInvariantViolation("leftmost cut did not reach 0");
    return out;
}

bool verify_sandwich(const Instance& inst, const Triangulation& t, const ElementarySimplex& s,
                     const std::vector<Interval>& rounded) {
    for (const SimplexVertex& v : s.vertices())
        for (Agent i = 1; i <= t.n; ++i)
            for (int j = 1; j <= t.n; ++j) {
                long long virt = virtual_value(inst, i, fractional_bundle(t, v, j));
                const Interval& iv = rounded[static_cast<size_t>(j) - 1];
                if (virt < v_minus(inst, i, iv) || virt > v_plus(inst, i, iv)) return false;
            }
    return true;
}

}  // namespace fairdiv
