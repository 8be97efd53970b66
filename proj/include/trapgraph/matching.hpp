#pragma once
#include <utility>
#include <vector>

#include "trapgraph/diagram.hpp"

namespace trapgraph {

// Pairwise vertex-disjoint edges between adjacent trapezoids. Edges are
// stored as (smaller index, larger index) in the order they were chosen.
struct Matching {
    std::vector<std::pair<int, int>> edges;

    int cardinality() const { return static_cast<int>(edges.size()); }
};

// The right spread f(i) = max(b(i), d(i)): a greedy sort key that compares an
// upper label against a lower label. Cross-line ties are possible because the
// two lines are labeled independently; they break toward the smaller index.
int right_spread(const Trapezoid& t);

// The published greedy: repeatedly take the unmatched trapezoid with minimum
// f, scan the other unmatched trapezoids in f order, pair it with the first
// adjacent one or discard it. Always produces a maximal matching, not
// necessarily a maximum one. O(n^2), reimplemented as described — no fixes.
Matching ghosh_pal_matching(const TrapezoidDiagram& d);

// A family refuting the greedy: k+1 mutually <<-separated copies of a
// machine-verified minimal 6-trapezoid gadget on which the greedy finds 2
// edges but the maximum matching has 3. Exhaustive search shows no diagram
// with at most 5 trapezoids fools the greedy at all (the rank labeling
// forces enough cross-line agreement in f), so 6 per gadget is minimal.
// counterexample(k) has 6(k+1) trapezoids; greedy 2(k+1), maximum 3(k+1),
// deficit exactly k+1.
TrapezoidDiagram counterexample(int k);

struct AuditReport {
    Matching greedy;
    Matching exact;
    int gap = 0;
};

// Greedy versus the exact matcher (see oracle); throws SizeLimitError when a
// connected component exceeds the exact matcher's bound.
AuditReport audit(const TrapezoidDiagram& d);

} // namespace trapgraph
