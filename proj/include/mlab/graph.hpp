#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mlab {

using VertexId = int32_t;
using EdgeId = int32_t;          // geometric edge
using OrientedEdgeId = int32_t;  // 2*e forward, 2*e+1 backward

// Finite undirected multigraph in Serre form: every geometric edge carries
// two mutually inverse orientations. Loops and parallel edges are allowed.
// Immutable after construction; all operations below are pure.
class Graph {
public:
    Graph() = default;
    Graph(int vertices, std::vector<VertexId> edge_u, std::vector<VertexId> edge_v);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edge_u_.size()); }
    int oriented_edge_count() const { return 2 * edge_count(); }

    VertexId source(OrientedEdgeId e) const { return (e & 1) ? edge_v_[e >> 1] : edge_u_[e >> 1]; }
    VertexId target(OrientedEdgeId e) const { return (e & 1) ? edge_u_[e >> 1] : edge_v_[e >> 1]; }
    static OrientedEdgeId inverse(OrientedEdgeId e) { return e ^ 1; }

    std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const { return {edge_u_[e], edge_v_[e]}; }

    // Oriented edges with source v, in construction order.
    std::span<const OrientedEdgeId> out_edges(VertexId v) const {
        return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
    }
    int degree(VertexId v) const { return adj_offset_[v + 1] - adj_offset_[v]; }
    int max_degree() const;

    bool is_simple() const;           // no loops, no parallel edges
    std::optional<int> regularity() const;  // common degree, or nullopt

private:
    int vertex_count_ = 0;
    std::vector<VertexId> edge_u_, edge_v_;  // per geometric edge
    std::vector<int32_t> adj_offset_;        // size V+1
    std::vector<OrientedEdgeId> adj_;
};

Graph build_graph(int vertices, std::span<const std::pair<int, int>> edges);
// Vertex count inferred as max id + 1 (0 for the empty list).
Graph build_graph(std::span<const std::pair<int, int>> edges);

// e-th edge replaced by a line of j edges through j-1 fresh vertices.
// |V'| = |V| + (j-1)|E|, |E'| = j|E|, girth' = j*girth.
Graph subdivide(const Graph& g, int j);

// Shortest homotopically nontrivial closed path: loops count 1, parallel
// pairs 2. nullopt = infinite (forest).
std::optional<int> girth(const Graph& g);

// Max eccentricity; nullopt iff disconnected (or empty).
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

struct Ball {
    std::vector<VertexId> vertices;  // BFS discovery order
    std::vector<int> dist;           // size |V|; -1 outside the ball

    bool contains(VertexId v) const { return dist[v] >= 0; }
};

// Exact BFS ball of radius r around center. Negative r yields the empty
// ball (the r/2-2 radius in the divergence definition can go negative).
Ball ball(const Graph& g, VertexId center, int r);

// Distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId src);

// Distances from src in the graph with `blocked` vertices deleted.
// blocked[src] must be false. -1 = unreachable.
std::vector<int> bfs_distances_avoiding(const Graph& g, VertexId src,
                                        const std::vector<char>& blocked);

// Shortest path (as oriented edges) from src to dst avoiding blocked
// vertices; nullopt if unreachable or an endpoint is blocked.
std::optional<std::vector<OrientedEdgeId>> shortest_path_avoiding(
    const Graph& g, VertexId src, VertexId dst, const std::vector<char>& blocked);

inline std::optional<std::vector<OrientedEdgeId>> shortest_path(const Graph& g, VertexId src,
                                                                VertexId dst) {
    return shortest_path_avoiding(g, src, dst, std::vector<char>(g.vertex_count(), 0));
}

bool is_edge_path(const Graph& g, std::span<const OrientedEdgeId> path);
inline VertexId path_target(const Graph& g, std::span<const OrientedEdgeId> path, VertexId src) {
    return path.empty() ? src : g.target(path.back());
}

// Exact Cheeger constant as a fraction |∂A| / min(|A|,|V\A|).
struct Ratio {
    long num = 0;
    long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct GraphStats {
    std::optional<int> girth;               // nullopt = infinite
    std::optional<int> diameter;            // nullopt = disconnected
    std::optional<Ratio> cheeger_exact;     // present when |V| <= exact cap
    std::optional<double> cheeger_lower_bound;
    int max_degree = 0;
};

GraphStats graph_stats(const Graph& g, int cheeger_exact_cap = 20);

}  // namespace mlab
