#include <doctest.h>

#include <algorithm>
#include <vector>

#include "trapgraph/cover.hpp"
#include "trapgraph/diagram.hpp"
#include "trapgraph/independence.hpp"
#include "trapgraph/oracle.hpp"
#include "trapgraph/rng.hpp"

using namespace trapgraph;

namespace {

// i-th trapezoid occupies slots 2i-1, 2i on both lines: a disjoint chain
// T(1) << T(2) << ... << T(n); every subset is independent.
TrapezoidDiagram chain(int n) {
    std::vector<Trapezoid> traps;
    for (int i = 1; i <= n; ++i) traps.push_back({2 * i - 1, 2 * i, 2 * i - 1, 2 * i});
    return TrapezoidDiagram(std::move(traps));
}

// i-th trapezoid spans (i, 2n+1-i) on both lines: pairwise nested, a clique;
// independent sets are single vertices.
TrapezoidDiagram antichain(int n) {
    std::vector<Trapezoid> traps;
    for (int i = 1; i <= n; ++i) traps.push_back({i, 2 * n + 1 - i, i, 2 * n + 1 - i});
    return TrapezoidDiagram(std::move(traps));
}

BigCount pow2(int e) {
    BigCount v = 1;
    v <<= e;
    return v;
}

} // namespace

TEST_CASE("degenerate diagrams: n = 0 and n = 1") {
    const AugmentedDiagram empty = augment(TrapezoidDiagram{});
    CHECK(max_is_size(empty) == 0);
    CHECK(count_independent_sets(empty) == 0);
    CHECK(count_max_independent_sets(empty) == 1); // the empty set
    CHECK(max_is_witness(empty).empty());
    CHECK(independence_polynomial(empty).coefficients == std::vector<BigCount>{1});

    const AugmentedDiagram one = augment(TrapezoidDiagram{{{1, 2, 1, 2}}});
    CHECK(max_is_size(one) == 1);
    CHECK(count_independent_sets(one) == 1);
    CHECK(count_max_independent_sets(one) == 1);
    CHECK(max_is_witness(one) == std::vector<int>{1});
}

TEST_CASE("max_chain labels every trapezoid with its best chain ending there") {
    // chain(3): max_ind must be 1, 2, 3 left to right, dummies 0 and 4.
    const AugmentedDiagram d = augment(chain(3));
    const MaxChainSweep sweep = max_chain(d);
    CHECK(sweep.alpha == 3);
    CHECK(sweep.max_ind == std::vector<int>{0, 1, 2, 3, 4});

    const AugmentedDiagram anti = augment(antichain(4));
    const MaxChainSweep flat = max_chain(anti);
    CHECK(flat.alpha == 1);
    CHECK(flat.max_ind == std::vector<int>{0, 1, 1, 1, 1, 2});
}

TEST_CASE("closed forms: disjoint chain and nested clique") {
    for (int n = 1; n <= 30; ++n) {
        const AugmentedDiagram c = augment(chain(n));
        CHECK(max_is_size(c) == n);
        CHECK(count_independent_sets(c) == pow2(n) - 1); // all nonempty subsets
        CHECK(count_max_independent_sets(c) == 1);
        CHECK(max_is_witness(c).size() == static_cast<std::size_t>(n));

        const AugmentedDiagram a = augment(antichain(n));
        CHECK(max_is_size(a) == 1);
        CHECK(count_independent_sets(a) == n);
        CHECK(count_max_independent_sets(a) == n);
        CHECK(max_is_witness(a) == std::vector<int>{1}); // ties prefer smallest index
    }
}

TEST_CASE("binomial polynomial on the disjoint chain") {
    const AugmentedDiagram d = augment(chain(6));
    const IndependencePolynomial poly = independence_polynomial(d);
    const std::vector<BigCount> expect = {1, 6, 15, 20, 15, 6, 1};
    CHECK(poly.coefficients == expect);
}

TEST_CASE("sweeps agree with exhaustive enumeration on random diagrams") {
    Rng rng(42u);
    for (int round = 0; round < 400; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(10));
        const TrapezoidDiagram d = random_diagram(n, rng.next());
        const AugmentedDiagram aug = augment(d);
        const EnumerationResult oracle = brute_enumerate(to_graph(d));
        CAPTURE(round); CAPTURE(n);
        CHECK(max_is_size(aug) == oracle.alpha);
        CHECK(count_max_independent_sets(aug) == oracle.max_is_count);
        BigCount nonempty = 0;
        for (std::size_t k = 1; k < oracle.per_size_counts.size(); ++k)
            nonempty += oracle.per_size_counts[k];
        CHECK(count_independent_sets(aug) == nonempty);
        const IndependencePolynomial poly = independence_polynomial(aug);
        REQUIRE(poly.coefficients.size() == oracle.per_size_counts.size());
        for (std::size_t k = 0; k < poly.coefficients.size(); ++k)
            CHECK(poly.coefficients[k] == oracle.per_size_counts[k]);
    }
}

TEST_CASE("witness is an independent set of maximum size, sorted ascending") {
    Rng rng(4242u);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(14));
        const TrapezoidDiagram d = random_diagram(n, rng.next());
        const AugmentedDiagram aug = augment(d);
        const std::vector<int> w = max_is_witness(aug);
        CHECK(static_cast<int>(w.size()) == max_is_size(aug));
        CHECK(std::is_sorted(w.begin(), w.end()));
        for (std::size_t x = 0; x < w.size(); ++x)
            for (std::size_t y = x + 1; y < w.size(); ++y)
                CHECK_FALSE(adjacent(d, w[x], w[y]));
    }
}

TEST_CASE("quadratic baselines agree with the sweeps") {
    Rng rng(9000u);
    for (int round = 0; round < 250; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(40));
        const AugmentedDiagram aug = augment(random_diagram(n, rng.next()));
        CAPTURE(round); CAPTURE(n);
        CHECK(max_is_quadratic(aug) == max_is_size(aug));
        CHECK(count_max_is_quadratic(aug) == count_max_independent_sets(aug));
    }
}

TEST_CASE("level passes insert and remove each trapezoid exactly once") {
    Rng rng(77u);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(50));
        const AugmentedDiagram aug = augment(random_diagram(n, rng.next()));
        LevelPassStats stats;
        const BigCount reused = count_max_independent_sets(aug, LevelReuse::targeted_reset, &stats);
        const BigCount fresh = count_max_independent_sets(aug, LevelReuse::fresh_per_level);
        CHECK(reused == fresh);
        REQUIRE(stats.inserts.size() == static_cast<std::size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) {
            CAPTURE(round); CAPTURE(n); CAPTURE(i);
            CHECK(stats.inserts[static_cast<std::size_t>(i)] == 1);
            CHECK(stats.removes[static_cast<std::size_t>(i)] == 1);
        }
    }
}

TEST_CASE("polynomial identities tie the three counters together") {
    Rng rng(31u);
    for (int round = 0; round < 150; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(25));
        const AugmentedDiagram aug = augment(random_diagram(n, rng.next()));
        const IndependencePolynomial poly = independence_polynomial(aug);
        const int alpha = max_is_size(aug);
        REQUIRE(static_cast<int>(poly.coefficients.size()) == alpha + 1);
        CHECK(poly.coefficients[0] == 1);
        if (alpha >= 1) CHECK(poly.coefficients[1] == n);
        CHECK(poly.coefficients[static_cast<std::size_t>(alpha)] == count_max_independent_sets(aug));
        BigCount total = 0;
        for (std::size_t k = 1; k < poly.coefficients.size(); ++k) total += poly.coefficients[k];
        CHECK(total == count_independent_sets(aug));
    }
}

TEST_CASE("fault injection hook perturbs alpha and is reversible") {
    const AugmentedDiagram aug = augment(random_diagram(8, 3u));
    const int before = max_is_size(aug);
    testhooks::inject_fault = true;
    const int faulty = max_is_size(aug);
    testhooks::inject_fault = false;
    CHECK(faulty == before + 1);
    CHECK(max_is_size(aug) == before);
}
