#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hb {

/// Undirected edge, stored canonically as (min, max).
using Edge = std::pair<int, int>;

/// Subset of vertex labels; callers may pass labels in any order.
using VertexSubset = std::vector<int>;

inline Edge canonical_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Undirected simple graph on vertices 0..n-1. Immutable after construction,
/// so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& e : edges_) {
            if (e.first == e.second)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.first));
            if (e.first > e.second) std::swap(e.first, e.second);
            check_label(e.first);
            check_label(e.second);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("Graph: duplicate edge");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted by (min, max) endpoint; this is the canonical edge order
    /// used for rigidity-matrix rows and file serialization.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        check_label(u);
        check_label(v);
        return std::binary_search(edges_.begin(), edges_.end(), canonical_edge(u, v));
    }

    int degree(int v) const {
        check_label(v);
        int deg = 0;
        for (const auto& [a, b] : edges_)
            if (a == v || b == v) ++deg;
        return deg;
    }

    std::vector<Edge> non_edges() const {
        std::vector<Edge> result;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) result.emplace_back(u, v);
        return result;
    }

    bool operator==(const Graph& other) const = default;

    void check_label(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex label " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted canonical (min,max) pairs
};

/// K_k on vertices 0..k-1.
inline Graph complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete_graph: need at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(k) * (k - 1) / 2);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, std::move(edges));
}

/// K_{a,b}: part A = 0..a-1, part B = a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: empty part");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
}

/// Number of edges with both endpoints in the subset.
inline int induced_edge_count(const Graph& g, std::span<const int> subset) {
    std::vector<char> in_set(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : subset) {
        g.check_label(v);
        in_set[static_cast<size_t>(v)] = 1;
    }
    int count = 0;
    for (const auto& [u, v] : g.edges())
        if (in_set[static_cast<size_t>(u)] && in_set[static_cast<size_t>(v)]) ++count;
    return count;
}

inline Graph add_edge(const Graph& g, int u, int v) {
    g.check_label(u);
    g.check_label(v);
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (g.has_edge(u, v)) throw std::invalid_argument("add_edge: edge already present");
    auto edges = g.edges();
    edges.push_back(canonical_edge(u, v));
    return Graph(g.vertex_count(), std::move(edges));
}

inline Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("remove_edge: edge not present");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    const Edge target = canonical_edge(u, v);
    for (const auto& e : g.edges())
        if (e != target) edges.push_back(e);
    return Graph(g.vertex_count(), std::move(edges));
}

namespace detail {

inline void check_injective_map(const Graph& g, std::span<const int> map, int n_out) {
    if (static_cast<int>(map.size()) != g.vertex_count())
        throw std::invalid_argument("union_with_relabeling: label map size mismatch");
    std::vector<char> used(static_cast<size_t>(n_out), 0);
    for (int target : map) {
        if (target < 0 || target >= n_out)
            throw std::invalid_argument("union_with_relabeling: target label out of range");
        if (used[static_cast<size_t>(target)])
            throw std::invalid_argument("union_with_relabeling: label map not injective");
        used[static_cast<size_t>(target)] = 1;
    }
}

}  // namespace detail

/// Merge two graphs into one on n_out vertices. Each input graph's vertex i is
/// renamed to map[i]; each map must be injective, but the two images may
/// overlap (that is how bunches are glued). Edges mapped to the same pair are
/// merged, set-union style.
inline Graph union_with_relabeling(const Graph& a, std::span<const int> map_a,
                                   const Graph& b, std::span<const int> map_b, int n_out) {
    detail::check_injective_map(a, map_a, n_out);
    detail::check_injective_map(b, map_b, n_out);
    std::vector<Edge> edges;
    edges.reserve(a.edges().size() + b.edges().size());
    for (const auto& [u, v] : a.edges()) edges.push_back(canonical_edge(map_a[u], map_a[v]));
    for (const auto& [u, v] : b.edges()) edges.push_back(canonical_edge(map_b[u], map_b[v]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n_out, std::move(edges));
}

/// Rename vertex i to perm[i]; perm must be a permutation of 0..n-1.
inline Graph relabeled(const Graph& g, std::span<const int> perm) {
    return union_with_relabeling(g, perm, Graph(0), {}, g.vertex_count());
}

}  // namespace hb
