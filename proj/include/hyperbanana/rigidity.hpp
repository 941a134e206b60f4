#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperbanana/constructions.hpp"
#include "hyperbanana/exact_linalg.hpp"
#include "hyperbanana/graph.hpp"

namespace hb {

inline long binomial2(long k) { return k * (k - 1) / 2; }

/// Dimension of the space of trivial (rigid-body) motions of R^d.
inline long trivial_motion_dim(int d) { return binomial2(d + 1); }

/// Integer point for every vertex; points are pairwise distinct.
class Embedding {
public:
    Embedding(int d, int n) : d_(d), n_(n), coords_(static_cast<size_t>(d) * n) {}

    int dimension() const { return d_; }
    int point_count() const { return n_; }

    std::int64_t& coord(int v, int k) { return coords_[static_cast<size_t>(v) * d_ + k]; }
    std::int64_t coord(int v, int k) const { return coords_[static_cast<size_t>(v) * d_ + k]; }

    std::span<const std::int64_t> point(int v) const {
        return {coords_.data() + static_cast<size_t>(v) * d_, static_cast<size_t>(d_)};
    }

private:
    int d_;
    int n_;
    std::vector<std::int64_t> coords_;
};

constexpr std::int64_t kDefaultCoordRange = 1 << 20;

/// splitmix64-style stream derivation, so every trial gets an independent
/// reproducible seed from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Coordinates uniform in [-range, range], resampling any point that collides
/// with an earlier one. Deterministic for a fixed (graph, d, seed, range).
inline Embedding random_embedding(const Graph& g, int d, std::uint64_t seed,
                                  std::int64_t range = kDefaultCoordRange) {
    if (d < 1) throw std::invalid_argument("random_embedding: d must be positive");
    if (range < g.vertex_count())
        throw std::invalid_argument("random_embedding: range too small for distinct points");
    std::mt19937_64 rng(seed);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(range) + 1;
    Embedding emb(d, g.vertex_count());
    std::set<std::vector<std::int64_t>> used;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::int64_t> point(static_cast<size_t>(d));
        for (int attempt = 0;; ++attempt) {
            if (attempt > 4096)
                throw std::runtime_error("random_embedding: cannot find distinct points; increase range");
            for (int k = 0; k < d; ++k)
                point[static_cast<size_t>(k)] =
                    static_cast<std::int64_t>(uniform_below(rng, span)) - range;
            if (used.insert(point).second) break;
        }
        for (int k = 0; k < d; ++k) emb.coord(v, k) = point[static_cast<size_t>(k)];
    }
    return emb;
}

namespace detail {

template <typename Scalar, typename Convert>
void fill_edge_row(std::span<Scalar> row, const Embedding& emb, int u, int v, Convert convert) {
    const int d = emb.dimension();
    for (int k = 0; k < d; ++k) {
        const std::int64_t diff = emb.coord(u, k) - emb.coord(v, k);
        row[static_cast<size_t>(u) * d + k] = convert(diff);
        row[static_cast<size_t>(v) * d + k] = convert(-diff);
    }
}

inline std::vector<std::uint64_t> mod_edge_row(const Embedding& emb, int u, int v,
                                               std::uint64_t p) {
    std::vector<std::uint64_t> row(static_cast<size_t>(emb.point_count()) * emb.dimension(), 0);
    fill_edge_row<std::uint64_t>(row, emb, u, v, [p](std::int64_t x) {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    });
    return row;
}

}  // namespace detail

/// m x dn rigidity matrix: the row of edge ij holds p_i - p_j in vertex i's
/// column block and p_j - p_i in vertex j's, zero elsewhere. Rows follow the
/// canonical sorted edge order, column blocks the vertex labels.
inline IntMatrix rigidity_matrix(const Graph& g, const Embedding& emb) {
    if (emb.point_count() != g.vertex_count())
        throw std::invalid_argument("rigidity_matrix: embedding size does not match graph");
    const int d = emb.dimension();
    IntMatrix m(g.edges().size(), static_cast<size_t>(d) * g.vertex_count());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto [u, v] = g.edges()[e];
        detail::fill_edge_row<BigInt>(m.row(e), emb, u, v, [](std::int64_t x) { return BigInt(x); });
    }
    return m;
}

enum class RankMode { modp, exact, both };

struct RankTrial {
    std::uint64_t embedding_seed = 0;
    std::uint64_t prime = 0;  // 0 for exact trials
    long rank = 0;
    bool exact = false;
};

struct GenericRankResult {
    long rank = 0;  // max over trials: a lower bound that is generically tight
    std::vector<RankTrial> trials;
};

struct RankOptions {
    int trials = 3;
    std::uint64_t seed = 42;
    RankMode mode = RankMode::modp;
    std::int64_t coord_range = kDefaultCoordRange;
};

/// Generic rank of the rigidity matrix, estimated as the max over independent
/// (random embedding, random prime) trials; exact/both modes add a Bareiss
/// run over the rationals. Every reported trial can be replayed from its seed.
inline GenericRankResult generic_rank(const Graph& g, int d, const RankOptions& opt = {}) {
    if (opt.trials < 1) throw std::invalid_argument("generic_rank: need at least one trial");
    GenericRankResult result;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t emb_seed = mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(t));
        const Embedding emb = random_embedding(g, d, emb_seed, opt.coord_range);
        const IntMatrix m = rigidity_matrix(g, emb);
        if (opt.mode == RankMode::modp || opt.mode == RankMode::both) {
            std::mt19937_64 prime_rng(mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(t) + 1));
            const std::uint64_t p = random_prime(prime_rng);
            result.trials.push_back({emb_seed, p, rank_mod_p(m, p), false});
        }
        if (opt.mode == RankMode::exact || (opt.mode == RankMode::both && t == 0)) {
            result.trials.push_back({emb_seed, 0, rank_exact(m), true});
        }
    }
    for (const auto& trial : result.trials) result.rank = std::max(result.rank, trial.rank);
    return result;
}

enum class Classification { minimally_rigid, rigid_overconstrained, flexible_independent, flexible_dependent };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::minimally_rigid: return "minimally-rigid";
        case Classification::rigid_overconstrained: return "rigid-overconstrained";
        case Classification::flexible_independent: return "flexible-independent";
        case Classification::flexible_dependent: return "flexible-dependent";
    }
    return "?";
}

struct RigidityVerdict {
    int d = 0;
    long n = 0;
    long m = 0;
    long rank = 0;
    long nullity = 0;      // d*n - rank
    long dof = 0;          // nullity - C(d+1,2)
    bool independent = false;  // rank == m
    Classification classification = Classification::flexible_independent;
    bool certified = false;  // rank matched a proven exact value supplied by the caller
    std::vector<RankTrial> trials;
};

struct ClassifyOptions {
    int trials = 3;
    std::uint64_t seed = 42;
    RankMode mode = RankMode::modp;
    std::int64_t coord_range = kDefaultCoordRange;
    /// Exact rank known from a proved theorem; when the computed rank matches,
    /// the verdict is marked certified instead of merely probabilistic.
    std::optional<long> proven_rank;
};

inline RigidityVerdict classify(const Graph& g, int d, const ClassifyOptions& opt = {}) {
    if (g.vertex_count() < d)
        throw std::invalid_argument(
            "classify: graph has fewer than d vertices; such frameworks span a lower-dimensional "
            "affine subspace and the trivial-motion count drops below C(d+1,2)");
    RankOptions rank_opt{opt.trials, opt.seed, opt.mode, opt.coord_range};
    GenericRankResult ranks = generic_rank(g, d, rank_opt);

    RigidityVerdict verdict;
    verdict.d = d;
    verdict.n = g.vertex_count();
    verdict.m = g.edge_count();
    verdict.rank = ranks.rank;
    verdict.nullity = static_cast<long>(d) * verdict.n - verdict.rank;
    verdict.dof = verdict.nullity - trivial_motion_dim(d);
    verdict.independent = verdict.rank == verdict.m;
    verdict.trials = std::move(ranks.trials);
    if (verdict.nullity < trivial_motion_dim(d))
        throw std::logic_error("classify: nullity below the trivial-motion dimension");
    if (verdict.dof == 0)
        verdict.classification = verdict.independent ? Classification::minimally_rigid
                                                     : Classification::rigid_overconstrained;
    else
        verdict.classification = verdict.independent ? Classification::flexible_independent
                                                     : Classification::flexible_dependent;
    verdict.certified = opt.proven_rank.has_value() && *opt.proven_rank == verdict.rank;
    return verdict;
}

struct ImpliedOptions {
    int trials = 3;
    std::uint64_t seed = 42;
    std::int64_t coord_range = kDefaultCoordRange;
};

/// Non-edges whose rigidity-matrix row already lies in the row space, i.e.
/// augmenting with the edge leaves the rank unchanged. Base matrix and
/// candidate rows share the embedding within a trial; a pair must survive
/// every trial to be reported.
inline std::vector<Edge> implied_edges(const Graph& g, int d,
                                       std::optional<std::vector<Edge>> candidates = std::nullopt,
                                       const ImpliedOptions& opt = {}) {
    std::vector<Edge> pairs;
    if (candidates.has_value()) {
        pairs = std::move(*candidates);
        for (auto& [u, v] : pairs) {
            g.check_label(u);
            g.check_label(v);
            if (u == v) throw std::invalid_argument("implied_edges: degenerate candidate pair");
            if (u > v) std::swap(u, v);
            if (g.has_edge(u, v))
                throw std::invalid_argument("implied_edges: candidate (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") is already an edge");
        }
    } else {
        pairs = g.non_edges();
    }

    std::vector<Edge> survivors = std::move(pairs);
    for (int t = 0; t < opt.trials && !survivors.empty(); ++t) {
        const std::uint64_t emb_seed = mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(t));
        std::mt19937_64 prime_rng(mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(t) + 1));
        const std::uint64_t p = random_prime(prime_rng);
        const Embedding emb = random_embedding(g, d, emb_seed, opt.coord_range);
        const ModEchelon echelon(reduce_mod(rigidity_matrix(g, emb), p));
        std::vector<Edge> next;
        for (const auto& [u, v] : survivors)
            if (echelon.in_row_space(detail::mod_edge_row(emb, u, v, p))) next.emplace_back(u, v);
        survivors = std::move(next);
    }
    return survivors;
}

/// True iff every K_U edge row of a generic B_{d,b} lies in the row space of
/// its rigidity matrix, i.e. all C(b,2) banana-vertex pairs are implied.
inline bool check_row_space_dependence(int d, int b, int trials = 3, std::uint64_t seed = 42) {
    if (b < 2) throw std::invalid_argument("check_row_space_dependence: need at least two banana vertices");
    const BananaBunch bunch = banana_bunch(d, b);
    std::vector<Edge> candidates;
    for (std::size_t i = 0; i < bunch.banana.size(); ++i)
        for (std::size_t j = i + 1; j < bunch.banana.size(); ++j)
            candidates.emplace_back(bunch.banana[i], bunch.banana[j]);
    ImpliedOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    const auto implied = implied_edges(bunch.graph, d, candidates, opt);
    return implied.size() == candidates.size();
}

}  // namespace hb
