#include "mlab/graph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace mlab {

Graph::Graph(int vertices, std::vector<VertexId> edge_u, std::vector<VertexId> edge_v)
    : vertex_count_(vertices), edge_u_(std::move(edge_u)), edge_v_(std::move(edge_v)) {
    if (edge_u_.size() != edge_v_.size())
        throw std::invalid_argument("edge endpoint lists differ in length");
    for (size_t i = 0; i < edge_u_.size(); ++i) {
        if (edge_u_[i] < 0 || edge_u_[i] >= vertices || edge_v_[i] < 0 || edge_v_[i] >= vertices)
            throw std::invalid_argument("edge endpoint out of range");
    }
    adj_offset_.assign(vertex_count_ + 1, 0);
    for (size_t i = 0; i < edge_u_.size(); ++i) {
        ++adj_offset_[edge_u_[i] + 1];
        ++adj_offset_[edge_v_[i] + 1];
    }
    for (int v = 0; v < vertex_count_; ++v) adj_offset_[v + 1] += adj_offset_[v];
    adj_.resize(2 * edge_u_.size());
    std::vector<int32_t> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (size_t i = 0; i < edge_u_.size(); ++i) {
        OrientedEdgeId fwd = static_cast<OrientedEdgeId>(2 * i);
        adj_[cursor[edge_u_[i]]++] = fwd;
        adj_[cursor[edge_v_[i]]++] = fwd + 1;
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_simple() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edge_endpoints(e);
        if (u == v) return false;
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) return false;
    }
    return true;
}

std::optional<int> Graph::regularity() const {
    if (vertex_count_ == 0) return std::nullopt;
    int d = degree(0);
    for (int v = 1; v < vertex_count_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

Graph build_graph(int vertices, std::span<const std::pair<int, int>> edges) {
    std::vector<VertexId> u, v;
    u.reserve(edges.size());
    v.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0) throw std::invalid_argument("vertex ids must be nonnegative");
        u.push_back(a);
        v.push_back(b);
    }
    return Graph(vertices, std::move(u), std::move(v));
}

Graph build_graph(std::span<const std::pair<int, int>> edges) {
    int n = 0;
    for (auto [a, b] : edges) n = std::max({n, a + 1, b + 1});
    return build_graph(n, edges);
}

Graph subdivide(const Graph& g, int j) {
    if (j < 1) throw std::invalid_argument("subdivision parameter must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) * j);
    int next = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        int prev = u;
        for (int s = 1; s < j; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return build_graph(g.vertex_count() + (j - 1) * g.edge_count(), edges);
}

namespace {

// Shortest cycle through root found by BFS; scanning an oriented edge to an
// already-visited vertex closes a walk of length dist[u]+dist[w]+1, which
// always contains a cycle of at most that length. Minimising over all roots
// gives the exact girth.
int shortest_cycle_through(const Graph& g, VertexId root, int best_so_far) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<OrientedEdgeId> via(g.vertex_count(), -1);
    std::vector<VertexId> queue;
    dist[root] = 0;
    queue.push_back(root);
    int best = best_so_far;
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        if (2 * dist[u] >= best - 1) break;
        for (OrientedEdgeId e : g.out_edges(u)) {
            if (via[u] >= 0 && e == Graph::inverse(via[u])) continue;  // backtrack is homotopically trivial
            VertexId w = g.target(e);
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                via[w] = e;
                queue.push_back(w);
            } else {
                best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    return best;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        if (u == v) return 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        best = shortest_cycle_through(g, v, best);
        if (best == 2) break;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<int> bfs_distances(const Graph& g, VertexId src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> queue;
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (OrientedEdgeId e : g.out_edges(u)) {
            VertexId w = g.target(e);
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Ball ball(const Graph& g, VertexId center, int r) {
    if (center < 0 || center >= g.vertex_count())
        throw std::invalid_argument("ball center out of range");
    Ball b;
    b.dist.assign(g.vertex_count(), -1);
    if (r < 0) return b;
    b.dist[center] = 0;
    b.vertices.push_back(center);
    for (size_t head = 0; head < b.vertices.size(); ++head) {
        VertexId u = b.vertices[head];
        if (b.dist[u] == r) continue;
        for (OrientedEdgeId e : g.out_edges(u)) {
            VertexId w = g.target(e);
            if (b.dist[w] < 0) {
                b.dist[w] = b.dist[u] + 1;
                b.vertices.push_back(w);
            }
        }
    }
    return b;
}

std::vector<int> bfs_distances_avoiding(const Graph& g, VertexId src,
                                        const std::vector<char>& blocked) {
    std::vector<int> dist(g.vertex_count(), -1);
    if (blocked[src]) return dist;
    std::vector<VertexId> queue;
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (OrientedEdgeId e : g.out_edges(u)) {
            VertexId w = g.target(e);
            if (dist[w] < 0 && !blocked[w]) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<std::vector<OrientedEdgeId>> shortest_path_avoiding(
    const Graph& g, VertexId src, VertexId dst, const std::vector<char>& blocked) {
    if (blocked[src] || blocked[dst]) return std::nullopt;
    if (src == dst) return std::vector<OrientedEdgeId>{};
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<OrientedEdgeId> via(g.vertex_count(), -1);
    std::vector<VertexId> queue;
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size() && dist[dst] < 0; ++head) {
        VertexId u = queue[head];
        for (OrientedEdgeId e : g.out_edges(u)) {
            VertexId w = g.target(e);
            if (dist[w] < 0 && !blocked[w]) {
                dist[w] = dist[u] + 1;
                via[w] = e;
                queue.push_back(w);
                if (w == dst) break;
            }
        }
    }
    if (dist[dst] < 0) return std::nullopt;
    std::vector<OrientedEdgeId> path(dist[dst]);
    VertexId cur = dst;
    for (int i = dist[dst] - 1; i >= 0; --i) {
        path[i] = via[cur];
        cur = g.source(via[cur]);
    }
    return path;
}

bool is_edge_path(const Graph& g, std::span<const OrientedEdgeId> path) {
    for (size_t i = 0; i < path.size(); ++i) {
        if (path[i] < 0 || path[i] >= g.oriented_edge_count()) return false;
        if (i > 0 && g.target(path[i - 1]) != g.source(path[i])) return false;
    }
    return true;
}

}  // namespace mlab
