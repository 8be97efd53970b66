#include "trapgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "trapgraph/errors.hpp"

namespace trapgraph {

EnumerationResult brute_enumerate(const Graph& g) {
    const int n = g.n;
    if (n > kMaxEnumerationVertices)
        throw SizeLimitError("brute_enumerate: n = " + std::to_string(n) + " exceeds bound " +
                             std::to_string(kMaxEnumerationVertices));
    std::vector<std::uint32_t> mask(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v)
        for (int u : g.adj[static_cast<std::size_t>(v)])
            mask[static_cast<std::size_t>(v) - 1] |= 1u << (u - 1);

    const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
    const std::size_t count = std::size_t{1} << n;
    // is_ind[s]: no edge inside s; built by peeling the lowest vertex
    std::vector<char> is_ind(count);
    std::vector<char> has_edge(count);
    is_ind[0] = 1;
    has_edge[0] = 0;
    for (std::uint32_t s = 1; s < count; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        const bool touches = (mask[static_cast<std::size_t>(v)] & rest) != 0;
        is_ind[s] = is_ind[rest] && !touches;
        has_edge[s] = has_edge[rest] || touches;
    }

    std::vector<std::uint64_t> per_size(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t vc = 0, min_vc_count = 0;
    int min_vc_size = n + 1;
    for (std::uint32_t s = 0; s < count; ++s) {
        const int size = std::popcount(s);
        if (is_ind[s]) ++per_size[static_cast<std::size_t>(size)];
        // s covers every edge iff no edge survives in its complement
        if (!has_edge[full & ~s]) {
            ++vc;
            if (size < min_vc_size) {
                min_vc_size = size;
                min_vc_count = 1;
            } else if (size == min_vc_size) {
                ++min_vc_count;
            }
        }
    }

    EnumerationResult r;
    r.alpha = 0;
    for (int k = 0; k <= n; ++k)
        if (per_size[static_cast<std::size_t>(k)] > 0) r.alpha = k;
    // indices 0..alpha only, mirroring the independence polynomial's shape
    r.per_size_counts.reserve(static_cast<std::size_t>(r.alpha) + 1);
    for (int k = 0; k <= r.alpha; ++k)
        r.per_size_counts.emplace_back(static_cast<unsigned long>(per_size[static_cast<std::size_t>(k)]));
    r.max_is_count = r.per_size_counts[static_cast<std::size_t>(r.alpha)];
    r.vc_count = BigCount(static_cast<unsigned long>(vc));
    r.min_vc_size = min_vc_size;
    r.min_vc_count = BigCount(static_cast<unsigned long>(min_vc_count));
    return r;
}

namespace {

struct MatchSearch {
    const std::vector<std::uint32_t>& mask;
    std::uint32_t active = 0;
    int best = -1;
    std::vector<std::pair<int, int>> current, best_edges;

    void run(int found) {
        const int upper = found + std::popcount(active) / 2;
        if (upper <= best) return; // cannot beat the incumbent
        if (active == 0 || std::popcount(active) == 1) {
            if (found > best) {
                best = found;
                best_edges = current;
            }
            return;
        }
        const int v = std::countr_zero(active);
        const std::uint32_t without_v = active & ~(1u << v);
        std::uint32_t nb = mask[static_cast<std::size_t>(v)] & without_v;
        while (nb) { // v matched to each neighbor in turn
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            active = without_v & ~(1u << u);
            current.emplace_back(v, u);
            run(found + 1);
            current.pop_back();
        }
        active = without_v; // v unmatched
        run(found);
        active |= 1u << v;
    }
};

} // namespace

Matching brute_max_matching(const Graph& g) {
    const int n = g.n;
    std::vector<int> component(static_cast<std::size_t>(n) + 1, 0);
    Matching result;
    int comp_id = 0;
    for (int start = 1; start <= n; ++start) {
        if (component[static_cast<std::size_t>(start)] != 0) continue;
        ++comp_id;
        std::vector<int> members{start};
        component[static_cast<std::size_t>(start)] = comp_id;
        for (std::size_t q = 0; q < members.size(); ++q)
            for (int u : g.adj[static_cast<std::size_t>(members[q])])
                if (component[static_cast<std::size_t>(u)] == 0) {
                    component[static_cast<std::size_t>(u)] = comp_id;
                    members.push_back(u);
                }
        const int s = static_cast<int>(members.size());
        if (s > kMaxMatchingComponentVertices)
            throw SizeLimitError("brute_max_matching: component of " + std::to_string(s) +
                                 " vertices exceeds bound " + std::to_string(kMaxMatchingComponentVertices));
        std::sort(members.begin(), members.end());
        std::vector<std::uint32_t> mask(static_cast<std::size_t>(s), 0);
        for (int li = 0; li < s; ++li)
            for (int u : g.adj[static_cast<std::size_t>(members[static_cast<std::size_t>(li)])]) {
                const auto pos = std::lower_bound(members.begin(), members.end(), u) - members.begin();
                mask[static_cast<std::size_t>(li)] |= 1u << pos;
            }
        MatchSearch search{mask};
        search.active = s == 32 ? ~0u : (1u << s) - 1;
        search.run(0);
        for (auto [lv, lu] : search.best_edges) {
            const int v = members[static_cast<std::size_t>(lv)], u = members[static_cast<std::size_t>(lu)];
            result.edges.emplace_back(std::min(v, u), std::max(v, u));
        }
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

} // namespace trapgraph
