#pragma once
#include <utility>
#include <vector>

namespace trapgraph {

// Undirected graph on vertices 1..n, adjacency lists sorted ascending.
// adj[0] is unused padding so vertex ids index directly.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit Graph(int vertices = 0) : n(vertices), adj(static_cast<std::size_t>(vertices) + 1) {}

    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n; ++u)
            for (int v : adj[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

} // namespace trapgraph
