#include "trapgraph/matching.hpp"

#include <algorithm>

#include "trapgraph/oracle.hpp"

namespace trapgraph {

int right_spread(const Trapezoid& t) { return std::max(t.b, t.d); }

Matching ghosh_pal_matching(const TrapezoidDiagram& d) {
    const int n = d.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const int fx = right_spread(d.trap(x)), fy = right_spread(d.trap(y));
        if (fx != fy) return fx < fy;
        return x < y;
    });
    std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
    Matching m;
    for (std::size_t base_pos = 0; base_pos < order.size(); ++base_pos) {
        const int base = order[base_pos];
        if (done[static_cast<std::size_t>(base)]) continue;
        done[static_cast<std::size_t>(base)] = 1; // matched or unmatchable either way
        for (std::size_t j = base_pos + 1; j < order.size(); ++j) {
            const int cand = order[j];
            if (done[static_cast<std::size_t>(cand)] || !adjacent(d, base, cand)) continue;
            done[static_cast<std::size_t>(cand)] = 1;
            m.edges.emplace_back(std::min(base, cand), std::max(base, cand));
            break;
        }
    }
    return m;
}

namespace {

// Minimal greedy-deficit gadget, locked after machine verification. f values
// 3, 8, 9, 10, 11, 12 ascend with the index. T(5) is T(1)'s only neighbor, so
// the greedy must spend it on T(1); the remaining {2,3,4,6} are pairwise
// adjacent except (4,6) with ascending f — the classic trap — so the greedy
// pairs (2,3) and strands 4 and 6, while (1,5)(2,4)(3,6) matches everything.
constexpr Trapezoid kGadget[6] = {
    {1, 2, 1, 3}, {4, 8, 4, 6}, {5, 9, 5, 8}, {3, 6, 9, 10}, {10, 11, 2, 7}, {7, 12, 11, 12},
};

} // namespace

TrapezoidDiagram counterexample(int k) {
    std::vector<Trapezoid> traps;
    traps.reserve(static_cast<std::size_t>(6 * (k + 1)));
    for (int copy = 0; copy <= k; ++copy) {
        const int shift = 12 * copy; // blocks use disjoint label ranges on both lines
        for (const Trapezoid& t : kGadget)
            traps.push_back(Trapezoid{t.a + shift, t.b + shift, t.c + shift, t.d + shift});
    }
    return TrapezoidDiagram(std::move(traps));
}

AuditReport audit(const TrapezoidDiagram& d) {
    AuditReport r;
    r.greedy = ghosh_pal_matching(d);
    r.exact = brute_max_matching(to_graph(d));
    r.gap = r.exact.cardinality() - r.greedy.cardinality();
    return r;
}

} // namespace trapgraph
