#pragma once
#include <vector>

#include "trapgraph/bigcount.hpp"
#include "trapgraph/graph.hpp"
#include "trapgraph/matching.hpp"

namespace trapgraph {

// Brute-force ground truth. Deliberately naive and obviously correct; every
// fast algorithm in this library is tested against these.

// Exhaustive bounds, sized so a single oracle call stays well under a second.
inline constexpr int kMaxEnumerationVertices = 22;
inline constexpr int kMaxMatchingComponentVertices = 20;

struct EnumerationResult {
    std::vector<BigCount> per_size_counts; // ISs by cardinality, indices 0..alpha; [0] = 1
    int alpha = 0;
    BigCount max_is_count;
    BigCount vc_count; // covers counted directly, empty cover included
    int min_vc_size = 0;
    BigCount min_vc_count;
};

// Iterates all 2^n subsets, classifying each as independent and/or covering.
// Throws SizeLimitError past kMaxEnumerationVertices.
EnumerationResult brute_enumerate(const Graph& g);

// Maximum-cardinality matching by branch and bound (vertex unmatched, or
// matched to each neighbor in turn), run per connected component. Throws
// SizeLimitError if a component exceeds kMaxMatchingComponentVertices.
Matching brute_max_matching(const Graph& g);

} // namespace trapgraph
