#pragma once

#include "canonical.hpp"

namespace disckit {

// Induced subgraph on the vertices within undirected distance `radius` of the root.
// Vertex 0 is the root; the rest follow BFS order of the source graph.
struct RootedDisc {
    SGraph graph;
    std::uint32_t radius = 0;
    std::vector<Vertex> source;  // source[i] = vertex of the host graph

    Fingerprint fingerprint() const { return disckit::fingerprint(graph, Vertex{0}); }
};

inline std::vector<Vertex> ball(const SGraph& g, Vertex v, std::uint32_t radius) {
    std::vector<std::uint32_t> dist(g.size(), kUnreachable);
    std::vector<Vertex> order{v};
    dist.at(v) = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex u = order[head];
        if (dist[u] == radius) continue;
        for (Vertex w : g.neighbors(u))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                order.push_back(w);
            }
    }
    return order;
}

inline RootedDisc disc(const SGraph& g, Vertex v, std::uint32_t radius) {
    auto vs = ball(g, v, radius);
    RootedDisc d{g.induced(vs), radius, std::move(vs)};
    return d;
}

// Validates that vertex 0 reaches every vertex within `radius`.
inline bool is_disc_of_radius(const SGraph& g, std::uint32_t radius) {
    if (g.size() == 0) return false;
    auto dist = g.distances(0);
    return std::all_of(dist.begin(), dist.end(), [&](auto x) { return x <= radius; });
}

}  // namespace disckit
