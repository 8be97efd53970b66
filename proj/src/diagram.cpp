#include "trapgraph/diagram.hpp"

#include <algorithm>
#include <string>

#include "trapgraph/errors.hpp"
#include "trapgraph/rng.hpp"

namespace trapgraph {

AugmentedDiagram::AugmentedDiagram(TrapezoidDiagram diagram) : base_(std::move(diagram)) {
    const int n = base_.n();
    const int top = 2 * n + 1;
    all_.reserve(static_cast<std::size_t>(n) + 2);
    all_.push_back(Trapezoid{0, 0, 0, 0});
    all_.insert(all_.end(), base_.trapezoids().begin(), base_.trapezoids().end());
    all_.push_back(Trapezoid{top, top, top, top});
    upper_index_.assign(static_cast<std::size_t>(top) + 1, 0);
    upper_index_[0] = 0;
    upper_index_[static_cast<std::size_t>(top)] = n + 1;
    for (int i = 1; i <= n; ++i) {
        upper_index_[static_cast<std::size_t>(all_[static_cast<std::size_t>(i)].a)] = i;
        upper_index_[static_cast<std::size_t>(all_[static_cast<std::size_t>(i)].b)] = i;
    }
}

void validate(const TrapezoidDiagram& d) {
    const int n = d.n();
    const int limit = 2 * n;
    std::vector<char> upper_seen(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<char> lower_seen(static_cast<std::size_t>(limit) + 1, 0);
    auto claim = [&](std::vector<char>& seen, int label, int i, const char* line) {
        if (label < 1 || label > limit)
            throw ValidationError("trapezoid " + std::to_string(i) + ": " + line + " label " +
                                  std::to_string(label) + " outside 1.." + std::to_string(limit));
        if (seen[static_cast<std::size_t>(label)])
            throw ValidationError("trapezoid " + std::to_string(i) + ": duplicate " + line + " label " +
                                  std::to_string(label));
        seen[static_cast<std::size_t>(label)] = 1;
    };
    for (int i = 1; i <= n; ++i) {
        const Trapezoid& t = d.trap(i);
        if (t.a >= t.b)
            throw ValidationError("trapezoid " + std::to_string(i) + ": a >= b");
        if (t.c >= t.d)
            throw ValidationError("trapezoid " + std::to_string(i) + ": c >= d");
        claim(upper_seen, t.a, i, "upper");
        claim(upper_seen, t.b, i, "upper");
        claim(lower_seen, t.c, i, "lower");
        claim(lower_seen, t.d, i, "lower");
    }
    // 2n distinct in-range labels per line is already a full permutation.
}

bool left_of(const AugmentedDiagram& d, int i, int j) {
    const Trapezoid& ti = d.trap(i);
    const Trapezoid& tj = d.trap(j);
    return ti.b < tj.a && ti.d < tj.c;
}

bool adjacent(const TrapezoidDiagram& d, int i, int j) {
    const Trapezoid& ti = d.trap(i);
    const Trapezoid& tj = d.trap(j);
    const bool ij = ti.b < tj.a && ti.d < tj.c;
    const bool ji = tj.b < ti.a && tj.d < ti.c;
    return !ij && !ji;
}

Graph to_graph(const TrapezoidDiagram& d) {
    const int n = d.n();
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (adjacent(d, i, j)) g.add_edge(i, j);
    return g;
}

TrapezoidDiagram random_diagram(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> upper(static_cast<std::size_t>(2 * n));
    std::vector<int> lower(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) upper[static_cast<std::size_t>(i)] = lower[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(upper);
    rng.shuffle(lower);
    std::vector<Trapezoid> traps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int u1 = upper[static_cast<std::size_t>(2 * i)], u2 = upper[static_cast<std::size_t>(2 * i + 1)];
        const int l1 = lower[static_cast<std::size_t>(2 * i)], l2 = lower[static_cast<std::size_t>(2 * i + 1)];
        traps[static_cast<std::size_t>(i)] =
            Trapezoid{std::min(u1, u2), std::max(u1, u2), std::min(l1, l2), std::max(l1, l2)};
    }
    return TrapezoidDiagram(std::move(traps));
}

AugmentedDiagram augment(const TrapezoidDiagram& d) { return AugmentedDiagram(d); }

} // namespace trapgraph
