#pragma once
#include <vector>

#include "trapgraph/bigcount.hpp"
#include "trapgraph/diagram.hpp"

namespace trapgraph {

// Independent sets of a trapezoid graph are exactly chains of the << order,
// so everything here is a sweep over the upper coordinates with a binary
// indexed tree keyed by lower coordinates: at a(i) query the prefix below
// c(i), at b(i) insert at d(i). Inserted entries then satisfy b < a by sweep
// order and d < c by prefix bound — precisely T(k) << T(i).

// max_ind(i) = size of the largest independent set among T(1..n) that
// contains T(i) as its rightmost element; alpha = max_ind(n+1) - 1.
struct MaxChainSweep {
    int alpha = 0;
    std::vector<int> max_ind; // indexed 0..n+1; dummies 0 and alpha+1
};

MaxChainSweep max_chain(const AugmentedDiagram& d);

// alpha(G); O(n log n).
int max_is_size(const AugmentedDiagram& d);

// A concrete maximum independent set (chain of <<), reconstructed by storing
// (score, index) pairs in the max tree and walking predecessors; ties prefer
// the smallest index. Returned sorted ascending.
std::vector<int> max_is_witness(const AugmentedDiagram& d);

// Number of nonempty independent sets.
BigCount count_independent_sets(const AugmentedDiagram& d);

// Whether the level passes reuse one sum tree via targeted reset (the
// O(n log n) trick) or allocate a fresh tree per level; both must agree.
enum class LevelReuse { targeted_reset, fresh_per_level };

// Per-trapezoid insert/remove counts recorded by the level passes; the reuse
// argument is exactly that each trapezoid is inserted and removed once.
struct LevelPassStats {
    std::vector<int> inserts; // indexed 1..n
    std::vector<int> removes;
};

// Number of independent sets of cardinality alpha. Level k holds the
// trapezoids with max_ind = k; each pass (k, k+1) inserts level k's counts
// and queries level k+1's, then resets only what it inserted.
BigCount count_max_independent_sets(const AugmentedDiagram& d,
                                    LevelReuse reuse = LevelReuse::targeted_reset,
                                    LevelPassStats* stats = nullptr);

// O(n^2) baselines, sharing no code with the sweeps: direct double-loop
// recurrences over trapezoids in ascending a order (a linear extension of
// <<). For benchmarking and cross-validation.
int max_is_quadratic(const AugmentedDiagram& d);
BigCount count_max_is_quadratic(const AugmentedDiagram& d);

// Coefficients s_0..s_alpha of I(G, x) = sum s_k x^k; s_k counts independent
// sets of cardinality k. alpha successive sweeps, pass k seeded with pass
// k-1's per-trapezoid chain counts.
struct IndependencePolynomial {
    std::vector<BigCount> coefficients;
};

IndependencePolynomial independence_polynomial(const AugmentedDiagram& d);

namespace testhooks {
// Flips the clamp comparison in the max-chain recurrence (test-only), so
// verification campaigns can prove they catch a wrong algorithm.
extern bool inject_fault;
} // namespace testhooks

} // namespace trapgraph
