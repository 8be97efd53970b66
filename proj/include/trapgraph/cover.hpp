#pragma once
#include <vector>

#include "trapgraph/bigcount.hpp"
#include "trapgraph/diagram.hpp"

namespace trapgraph {

// Vertex-cover results by complementation: C is a vertex cover iff V - C is
// independent. This module is a thin certified adapter over the independence
// sweeps; it performs no sweeps of its own.
struct CoverReport {
    int min_vc_size = 0;
    BigCount num_min_vc;
    BigCount num_vc;
    std::vector<int> witness;
};

// n - alpha(G).
int min_vertex_cover_size(const AugmentedDiagram& d);

// Equals the number of maximum independent sets.
BigCount count_minimum_vertex_covers(const AugmentedDiagram& d);

// Counts every vertex cover, including the empty cover of an edgeless graph;
// equals (nonempty independent sets) + 1.
BigCount count_vertex_covers(const AugmentedDiagram& d);

// V minus a maximum-independent-set witness; covers every edge.
std::vector<int> min_vertex_cover_witness(const AugmentedDiagram& d);

CoverReport cover_report(const AugmentedDiagram& d);

} // namespace trapgraph
