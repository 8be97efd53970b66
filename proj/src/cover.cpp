#include "trapgraph/cover.hpp"

#include "trapgraph/independence.hpp"

namespace trapgraph {

int min_vertex_cover_size(const AugmentedDiagram& d) { return d.n() - max_is_size(d); }

BigCount count_minimum_vertex_covers(const AugmentedDiagram& d) { return count_max_independent_sets(d); }

BigCount count_vertex_covers(const AugmentedDiagram& d) { return count_independent_sets(d) + 1; }

std::vector<int> min_vertex_cover_witness(const AugmentedDiagram& d) {
    const std::vector<int> is = max_is_witness(d);
    std::vector<int> cover;
    cover.reserve(static_cast<std::size_t>(d.n() - static_cast<int>(is.size())));
    std::size_t next = 0;
    for (int i = 1; i <= d.n(); ++i) {
        if (next < is.size() && is[next] == i)
            ++next;
        else
            cover.push_back(i);
    }
    return cover;
}

CoverReport cover_report(const AugmentedDiagram& d) {
    CoverReport r;
    r.min_vc_size = min_vertex_cover_size(d);
    r.num_min_vc = count_minimum_vertex_covers(d);
    r.num_vc = count_vertex_covers(d);
    r.witness = min_vertex_cover_witness(d);
    return r;
}

} // namespace trapgraph
