#pragma once

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperbanana/graph.hpp"

namespace hb {

/// Vertex-set partition of a hyperbanana H_{d,b}: two complete graphs (v1, v2)
/// and the shared banana vertices (u). e_plus holds the extra matching edges
/// of the even variant and is empty otherwise.
struct HyperbananaLabels {
    std::vector<int> v1;
    std::vector<int> v2;
    std::vector<int> u;
    std::vector<Edge> e_plus;
    int d = 0;
    int b = 0;
};

struct BananaBunch {
    Graph graph;
    std::vector<int> base;    // the K_d, labels 0..d-1
    std::vector<int> banana;  // labels d..d+b-1, each adjacent to all of base
};

struct LabeledHyperbanana {
    Graph graph;
    HyperbananaLabels labels;
};

/// d-Henneberg 0-extension: add one vertex (label n) joined to d distinct
/// existing vertices.
inline Graph henneberg0(const Graph& g, int d, std::span<const int> attach) {
    if (d < 1) throw std::invalid_argument("henneberg0: d must be positive");
    if (d > g.vertex_count())
        throw std::invalid_argument("henneberg0: d exceeds vertex count");
    if (static_cast<int>(attach.size()) != d)
        throw std::invalid_argument("henneberg0: expected exactly d attachment vertices");
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : attach) {
        g.check_label(v);
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("henneberg0: repeated attachment vertex " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
    const int fresh = g.vertex_count();
    auto edges = g.edges();
    for (int v : attach) edges.push_back(canonical_edge(v, fresh));
    return Graph(fresh + 1, std::move(edges));
}

/// B_{d,b}: K_d plus b d-Henneberg 0-extensions, every new vertex attached to
/// the full base. Layout: base 0..d-1, banana vertices d..d+b-1.
inline BananaBunch banana_bunch(int d, int b) {
    if (d < 1 || b < 1) throw std::invalid_argument("banana_bunch: d and b must be positive");
    Graph g = complete_graph(d);
    std::vector<int> base(static_cast<size_t>(d));
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> banana;
    banana.reserve(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) {
        g = henneberg0(g, d, base);
        banana.push_back(d + i);
    }
    return BananaBunch{std::move(g), std::move(base), std::move(banana)};
}

/// H_{d,b}: two copies of B_{d,b} glued along the banana vertices, i-th banana
/// vertex of one bunch identified with the i-th of the other. Layout:
/// v1 = 0..d-1, v2 = d..2d-1, u = 2d..2d+b-1.
inline LabeledHyperbanana hyperbanana(int d, int b) {
    BananaBunch bunch = banana_bunch(d, b);
    const int n_out = 2 * d + b;

    std::vector<int> map1(static_cast<size_t>(d + b));
    std::vector<int> map2(static_cast<size_t>(d + b));
    for (int i = 0; i < d; ++i) {
        map1[static_cast<size_t>(i)] = i;
        map2[static_cast<size_t>(i)] = d + i;
    }
    for (int i = 0; i < b; ++i) {
        map1[static_cast<size_t>(d + i)] = 2 * d + i;
        map2[static_cast<size_t>(d + i)] = 2 * d + i;
    }
    Graph glued = union_with_relabeling(bunch.graph, map1, bunch.graph, map2, n_out);

    HyperbananaLabels labels;
    labels.d = d;
    labels.b = b;
    for (int i = 0; i < d; ++i) {
        labels.v1.push_back(i);
        labels.v2.push_back(d + i);
    }
    for (int i = 0; i < b; ++i) labels.u.push_back(2 * d + i);
    return LabeledHyperbanana{std::move(glued), std::move(labels)};
}

/// How the d/2 extra edges of the even variant are placed between the two
/// complete graphs. `matching` pairs v1[i] with v2[i] (all endpoints
/// distinct); `fan` routes every extra edge through v1[0].
enum class EvenEdgeStyle { matching, fan };

/// H+_{d,b} for even d: H_{d,b} plus d/2 edges between the complete graphs.
inline LabeledHyperbanana even_hyperbanana(int d, int b,
                                           EvenEdgeStyle style = EvenEdgeStyle::matching) {
    if (d % 2 != 0) throw std::invalid_argument("even_hyperbanana: d must be even");
    if (d < 2 || b < 1) throw std::invalid_argument("even_hyperbanana: d and b must be positive");
    LabeledHyperbanana hb = hyperbanana(d, b);
    Graph g = hb.graph;
    for (int i = 0; i < d / 2; ++i) {
        const int from = style == EvenEdgeStyle::matching ? i : 0;
        const int to = d + i;
        g = add_edge(g, from, to);
        hb.labels.e_plus.push_back(canonical_edge(from, to));
    }
    hb.graph = std::move(g);
    return hb;
}

}  // namespace hb
