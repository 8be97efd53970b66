#include "trapgraph/independence.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "trapgraph/fenwick.hpp"

namespace trapgraph {

namespace testhooks {
bool inject_fault = false;
} // namespace testhooks

namespace {

// Score with the trapezoid that achieves it; max prefers higher score, then
// smaller index, so witnesses are deterministic.
struct ScoredIndex {
    int score = 0;
    int index = 0;

    friend bool operator<(const ScoredIndex& x, const ScoredIndex& y) {
        if (x.score != y.score) return x.score < y.score;
        return x.index > y.index;
    }
};

} // namespace

MaxChainSweep max_chain(const AugmentedDiagram& d) {
    const int n = d.n();
    MaxChainSweep out;
    out.max_ind.assign(static_cast<std::size_t>(n) + 2, 0);
    MaxFenwick<int> cum_max(2 * n); // sentinel -1: untouched prefixes
    const int clamp_floor = testhooks::inject_fault ? 1 : 0;
    for (int j = 1; j <= 2 * n; ++j) {
        const int i = d.upper_index(j);
        const Trapezoid& t = d.trap(i);
        if (j == t.a) {
            // dummy T(0) contributes 0 without occupying a tree slot
            out.max_ind[static_cast<std::size_t>(i)] = std::max(cum_max.prefix_max(t.c), clamp_floor) + 1;
        } else {
            cum_max.raise(t.d, out.max_ind[static_cast<std::size_t>(i)]);
        }
    }
    out.max_ind[static_cast<std::size_t>(n) + 1] = std::max(cum_max.prefix_max(2 * n), clamp_floor) + 1;
    out.alpha = out.max_ind[static_cast<std::size_t>(n) + 1] - 1;
    return out;
}

int max_is_size(const AugmentedDiagram& d) { return max_chain(d).alpha; }

std::vector<int> max_is_witness(const AugmentedDiagram& d) {
    const int n = d.n();
    std::vector<int> pred(static_cast<std::size_t>(n) + 2, 0);
    std::vector<int> score(static_cast<std::size_t>(n) + 2, 0);
    MaxFenwick<ScoredIndex> cum_max(2 * n, ScoredIndex{0, 0}); // sentinel = dummy T(0)
    for (int j = 1; j <= 2 * n; ++j) {
        const int i = d.upper_index(j);
        const Trapezoid& t = d.trap(i);
        if (j == t.a) {
            const ScoredIndex best = cum_max.prefix_max(t.c);
            score[static_cast<std::size_t>(i)] = best.score + 1;
            pred[static_cast<std::size_t>(i)] = best.index;
        } else {
            cum_max.raise(t.d, ScoredIndex{score[static_cast<std::size_t>(i)], i});
        }
    }
    std::vector<int> witness;
    for (int i = cum_max.prefix_max(2 * n).index; i != 0; i = pred[static_cast<std::size_t>(i)])
        witness.push_back(i);
    std::sort(witness.begin(), witness.end());
    return witness;
}

BigCount count_independent_sets(const AugmentedDiagram& d) {
    const int n = d.n();
    std::vector<BigCount> num_ind(static_cast<std::size_t>(n) + 1);
    SumFenwick<BigCount> tree(2 * n);
    for (int j = 1; j <= 2 * n; ++j) {
        const int i = d.upper_index(j);
        const Trapezoid& t = d.trap(i);
        if (j == t.a) {
            // chains ending at T(i): the singleton plus one per chain ending
            // at any predecessor
            num_ind[static_cast<std::size_t>(i)] = 1 + tree.prefix_sum(t.c);
        } else {
            tree.update(t.d, num_ind[static_cast<std::size_t>(i)]);
        }
    }
    return tree.prefix_sum(2 * n);
}

BigCount count_max_independent_sets(const AugmentedDiagram& d, LevelReuse reuse, LevelPassStats* stats) {
    const int n = d.n();
    if (stats) {
        stats->inserts.assign(static_cast<std::size_t>(n) + 1, 0);
        stats->removes.assign(static_cast<std::size_t>(n) + 1, 0);
    }
    if (n == 0) return 1; // the empty set is the unique maximum IS
    const MaxChainSweep chain = max_chain(d);
    const int alpha = chain.alpha;

    // level buckets: S(k) = trapezoids with max_ind = k, in two sweep orders
    std::vector<std::vector<int>> by_b(static_cast<std::size_t>(alpha) + 1);
    std::vector<std::vector<int>> by_a(static_cast<std::size_t>(alpha) + 1);
    for (int j = 1; j <= 2 * n; ++j) { // upper order makes each bucket sorted
        const int i = d.upper_index(j);
        const int k = chain.max_ind[static_cast<std::size_t>(i)];
        if (j == d.trap(i).a)
            by_a[static_cast<std::size_t>(k)].push_back(i);
        else
            by_b[static_cast<std::size_t>(k)].push_back(i);
    }

    std::vector<BigCount> num_max(static_cast<std::size_t>(n) + 1);
    for (int i : by_a[1]) num_max[static_cast<std::size_t>(i)] = 1;

    auto make_tree = [&] { return std::make_unique<SumFenwick<BigCount>>(2 * n); };
    std::unique_ptr<SumFenwick<BigCount>> tree = make_tree();
    std::vector<std::pair<int, BigCount>> touched;
    std::vector<int> touched_traps;

    BigCount total = 0;
    for (int k = 1; k <= alpha; ++k) {
        const std::vector<int>& inserts = by_b[static_cast<std::size_t>(k)];
        std::size_t next_insert = 0;
        auto insert_up_to = [&](int coord) { // all level-k trapezoids with b < coord
            while (next_insert < inserts.size() && d.trap(inserts[next_insert]).b < coord) {
                const int i = inserts[next_insert++];
                const Trapezoid& t = d.trap(i);
                tree->update(t.d, num_max[static_cast<std::size_t>(i)]);
                touched.emplace_back(t.d, num_max[static_cast<std::size_t>(i)]);
                touched_traps.push_back(i);
                if (stats) ++stats->inserts[static_cast<std::size_t>(i)];
            }
        };
        if (k < alpha) {
            for (int i : by_a[static_cast<std::size_t>(k) + 1]) {
                const Trapezoid& t = d.trap(i);
                insert_up_to(t.a);
                num_max[static_cast<std::size_t>(i)] = tree->prefix_sum(t.c);
            }
        }
        insert_up_to(2 * n + 1); // flush: every trapezoid enters the tree once
        if (k == alpha) total = tree->prefix_sum(2 * n);
        if (reuse == LevelReuse::targeted_reset) {
            tree->targeted_reset(touched);
        } else {
            tree = make_tree();
        }
        if (stats)
            for (int i : touched_traps) ++stats->removes[static_cast<std::size_t>(i)];
        touched.clear();
        touched_traps.clear();
    }
    return total;
}

int max_is_quadratic(const AugmentedDiagram& d) {
    const int n = d.n();
    // ascending a is a linear extension of <<: j << i implies a(j) < a(i)
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= 2 * n; ++j) {
        const int i = d.upper_index(j);
        if (j == d.trap(i).a) order.push_back(i);
    }
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n)),
        c(static_cast<std::size_t>(n)), dd(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        const Trapezoid& t = d.trap(order[static_cast<std::size_t>(p)]);
        a[static_cast<std::size_t>(p)] = t.a;
        b[static_cast<std::size_t>(p)] = t.b;
        c[static_cast<std::size_t>(p)] = t.c;
        dd[static_cast<std::size_t>(p)] = t.d;
    }
    int alpha = 0;
    for (int p = 0; p < n; ++p) {
        int best = 0;
        const int ap = a[static_cast<std::size_t>(p)], cp = c[static_cast<std::size_t>(p)];
        for (int q = 0; q < p; ++q)
            if (b[static_cast<std::size_t>(q)] < ap && dd[static_cast<std::size_t>(q)] < cp)
                best = std::max(best, m[static_cast<std::size_t>(q)]);
        m[static_cast<std::size_t>(p)] = best + 1;
        alpha = std::max(alpha, m[static_cast<std::size_t>(p)]);
    }
    return alpha;
}

BigCount count_max_is_quadratic(const AugmentedDiagram& d) {
    const int n = d.n();
    if (n == 0) return 1;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= 2 * n; ++j) {
        const int i = d.upper_index(j);
        if (j == d.trap(i).a) order.push_back(i);
    }
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    std::vector<BigCount> cnt(static_cast<std::size_t>(n));
    int alpha = 0;
    for (int p = 0; p < n; ++p) {
        const Trapezoid& tp = d.trap(order[static_cast<std::size_t>(p)]);
        int best = 0;
        for (int q = 0; q < p; ++q) {
            const Trapezoid& tq = d.trap(order[static_cast<std::size_t>(q)]);
            if (tq.b < tp.a && tq.d < tp.c) best = std::max(best, m[static_cast<std::size_t>(q)]);
        }
        m[static_cast<std::size_t>(p)] = best + 1;
        alpha = std::max(alpha, m[static_cast<std::size_t>(p)]);
        if (best == 0) {
            cnt[static_cast<std::size_t>(p)] = 1;
        } else {
            BigCount total = 0;
            for (int q = 0; q < p; ++q) {
                const Trapezoid& tq = d.trap(order[static_cast<std::size_t>(q)]);
                if (tq.b < tp.a && tq.d < tp.c && m[static_cast<std::size_t>(q)] == best)
                    total += cnt[static_cast<std::size_t>(q)];
            }
            cnt[static_cast<std::size_t>(p)] = std::move(total);
        }
    }
    BigCount result = 0;
    for (int p = 0; p < n; ++p)
        if (m[static_cast<std::size_t>(p)] == alpha) result += cnt[static_cast<std::size_t>(p)];
    return result;
}

IndependencePolynomial independence_polynomial(const AugmentedDiagram& d) {
    const int n = d.n();
    IndependencePolynomial poly;
    poly.coefficients.emplace_back(1); // s_0: the empty set
    if (n == 0) return poly;
    const int alpha = max_is_size(d);
    std::vector<BigCount> prev(static_cast<std::size_t>(n) + 1, BigCount(1)); // chains of length 1
    poly.coefficients.emplace_back(n);
    for (int k = 2; k <= alpha; ++k) {
        std::vector<BigCount> cur(static_cast<std::size_t>(n) + 1);
        SumFenwick<BigCount> tree(2 * n);
        for (int j = 1; j <= 2 * n; ++j) {
            const int i = d.upper_index(j);
            const Trapezoid& t = d.trap(i);
            if (j == t.a) {
                cur[static_cast<std::size_t>(i)] = tree.prefix_sum(t.c);
            } else if (prev[static_cast<std::size_t>(i)] != 0) {
                tree.update(t.d, prev[static_cast<std::size_t>(i)]);
            }
        }
        BigCount s_k = 0;
        for (int i = 1; i <= n; ++i) s_k += cur[static_cast<std::size_t>(i)];
        poly.coefficients.push_back(std::move(s_k));
        prev = std::move(cur);
    }
    return poly;
}

} // namespace trapgraph
