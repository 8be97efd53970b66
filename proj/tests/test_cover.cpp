#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "trapgraph/cover.hpp"
#include "trapgraph/diagram.hpp"
#include "trapgraph/independence.hpp"
#include "trapgraph/oracle.hpp"
#include "trapgraph/rng.hpp"

using namespace trapgraph;

TEST_CASE("cover results match the enumeration oracle") {
    Rng rng(808u);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(11));
        const TrapezoidDiagram d = random_diagram(n, rng.next());
        const AugmentedDiagram aug = augment(d);
        const EnumerationResult oracle = brute_enumerate(to_graph(d));
        CAPTURE(round); CAPTURE(n);
        CHECK(min_vertex_cover_size(aug) == oracle.min_vc_size);
        CHECK(count_minimum_vertex_covers(aug) == oracle.min_vc_count);
        CHECK(count_vertex_covers(aug) == oracle.vc_count);
    }
}

TEST_CASE("complementation identities hold exactly") {
    Rng rng(909u);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(30));
        const AugmentedDiagram aug = augment(random_diagram(n, rng.next()));
        CHECK(min_vertex_cover_size(aug) + max_is_size(aug) == n);
        CHECK(count_minimum_vertex_covers(aug) == count_max_independent_sets(aug));
        CHECK(count_vertex_covers(aug) == count_independent_sets(aug) + 1);
    }
}

TEST_CASE("cover witness is the complement of an IS witness and covers all edges") {
    Rng rng(1001u);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng.next_below(15));
        const TrapezoidDiagram d = random_diagram(n, rng.next());
        const AugmentedDiagram aug = augment(d);
        const std::vector<int> cover = min_vertex_cover_witness(aug);
        CHECK(static_cast<int>(cover.size()) == min_vertex_cover_size(aug));
        CHECK(std::is_sorted(cover.begin(), cover.end()));
        const std::set<int> in_cover(cover.begin(), cover.end());
        for (const auto& [u, v] : to_graph(d).edges())
            CHECK((in_cover.count(u) || in_cover.count(v)));
        // complement of the IS witness, exactly
        std::set<int> expect;
        for (int i = 1; i <= n; ++i) expect.insert(i);
        for (int i : max_is_witness(aug)) expect.erase(i);
        CHECK(in_cover == expect);
    }
}

TEST_CASE("edgeless and clique extremes") {
    // disjoint chain: empty cover suffices
    std::vector<Trapezoid> chain;
    for (int i = 1; i <= 5; ++i) chain.push_back({2 * i - 1, 2 * i, 2 * i - 1, 2 * i});
    const AugmentedDiagram c = augment(TrapezoidDiagram(chain));
    CHECK(min_vertex_cover_size(c) == 0);
    CHECK(count_minimum_vertex_covers(c) == 1);
    CHECK(count_vertex_covers(c) == 32); // every subset covers nothing
    CHECK(min_vertex_cover_witness(c).empty());

    // nested clique: cover must hit all but one vertex
    std::vector<Trapezoid> nest;
    for (int i = 1; i <= 5; ++i) nest.push_back({i, 11 - i, i, 11 - i});
    const AugmentedDiagram k = augment(TrapezoidDiagram(nest));
    CHECK(min_vertex_cover_size(k) == 4);
    CHECK(count_minimum_vertex_covers(k) == 5);
    CHECK(count_vertex_covers(k) == 6); // 5 near-misses + the full set
    CHECK(min_vertex_cover_witness(k) == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("deleting a min-cover vertex drops the cover number by one") {
    // For any vertex v in some minimum cover, G - v has a minimum cover one
    // smaller. Spot-check by brute force on the literal deleted graph.
    Rng rng(606u);
    int checked = 0;
    for (int round = 0; round < 120 && checked < 60; ++round) {
        const int n = 2 + static_cast<int>(rng.next_below(8));
        const TrapezoidDiagram d = random_diagram(n, rng.next());
        const AugmentedDiagram aug = augment(d);
        const std::vector<int> cover = min_vertex_cover_witness(aug);
        if (cover.empty()) continue;
        const int v = cover[static_cast<std::size_t>(rng.next_below(cover.size()))];
        Graph g(n); // same vertex set, v isolated: covers of G - v
        for (const auto& [a, b] : to_graph(d).edges())
            if (a != v && b != v) g.add_edge(a, b);
        const EnumerationResult deleted = brute_enumerate(g);
        CHECK(deleted.min_vc_size == min_vertex_cover_size(aug) - 1);
        ++checked;
    }
    CHECK(checked == 60);
}
