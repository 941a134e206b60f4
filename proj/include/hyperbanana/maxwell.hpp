#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperbanana/graph.hpp"
#include "hyperbanana/rigidity.hpp"

namespace hb {

struct MaxwellOptions {
    int parallelism = 0;  // 0 = hardware concurrency
    int subset_cap = 28;  // max n for exhaustive enumeration; raise explicitly to override
    bool force_condition2 = false;  // run the subset check even when condition 1 fails
};

struct Condition1Report {
    long expected = 0;  // d*n - C(d+1,2)
    long actual = 0;    // m
    bool pass = false;
};

struct Condition2Report {
    bool ran = false;
    bool pass = false;
    VertexSubset witness;         // first violating subset in canonical order; empty if pass
    long witness_edge_count = 0;  // induced edges of the witness
    unsigned long long subsets_checked = 0;  // subsets of size >= d evaluated
};

struct MaxwellReport {
    int d = 0;
    Condition1Report condition1;
    Condition2Report condition2;
    bool pass = false;  // condition1 pass AND condition2 ran and passed
    double elapsed_seconds = 0.0;
};

inline Condition1Report check_condition1(const Graph& g, int d) {
    if (g.vertex_count() < d)
        throw std::invalid_argument("check_condition1: graph has fewer than d vertices");
    Condition1Report report;
    report.expected = static_cast<long>(d) * g.vertex_count() - trivial_motion_dim(d);
    report.actual = g.edge_count();
    report.pass = report.expected == report.actual;
    return report;
}

namespace detail {

struct SubsetScanContext {
    std::vector<std::uint64_t> adjacency;  // bitmask of neighbors per vertex
    int n = 0;
    int d = 0;
    long threshold_offset = 0;  // C(d+1,2)
    int low_bits = 0;           // Gray-enumerated bits; high bits form the block prefix
};

struct BlockViolation {
    std::uint64_t mask = 0;
    long edge_count = 0;
};

/// Scan one prefix block in canonical order: fixed high bits, low bits in Gray
/// sequence. The induced edge count is updated incrementally from the flipped
/// vertex's neighbor mask. Returns the first violation, or nullopt. `checked`
/// accumulates evaluated subsets (size >= d); scanning stops early when
/// `stop` is set (the partial result is only used to decide existence).
inline std::optional<BlockViolation> scan_block(const SubsetScanContext& ctx, std::uint64_t prefix,
                                                unsigned long long& checked,
                                                const std::atomic<bool>* stop = nullptr) {
    const std::uint64_t hi = prefix << ctx.low_bits;
    std::uint64_t cur = hi;
    long cnt = 0;
    for (int v = ctx.low_bits; v < ctx.n; ++v)
        if (cur >> v & 1) cnt += std::popcount(ctx.adjacency[static_cast<size_t>(v)] & cur & ((1ULL << v) - 1));

    const std::uint64_t steps = 1ULL << ctx.low_bits;
    for (std::uint64_t i = 0;; ++i) {
        const int size = std::popcount(cur);
        if (size >= ctx.d) {
            ++checked;
            if (cnt > static_cast<long>(ctx.d) * size - ctx.threshold_offset)
                return BlockViolation{cur, cnt};
        }
        if (i + 1 >= steps) break;
        if (stop && (i & 0x3FF) == 0x3FF && stop->load(std::memory_order_relaxed))
            return std::nullopt;
        const int v = std::countr_zero(i + 1);
        const std::uint64_t bit = 1ULL << v;
        if (cur & bit) {
            cur ^= bit;
            cnt -= std::popcount(ctx.adjacency[static_cast<size_t>(v)] & cur);
        } else {
            cnt += std::popcount(ctx.adjacency[static_cast<size_t>(v)] & cur);
            cur ^= bit;
        }
    }
    return std::nullopt;
}

inline SubsetScanContext make_scan_context(const Graph& g, int d, int threads) {
    SubsetScanContext ctx;
    ctx.n = g.vertex_count();
    ctx.d = d;
    ctx.threshold_offset = trivial_motion_dim(d);
    ctx.adjacency.assign(static_cast<size_t>(ctx.n), 0);
    for (const auto& [u, v] : g.edges()) {
        ctx.adjacency[static_cast<size_t>(u)] |= 1ULL << v;
        ctx.adjacency[static_cast<size_t>(v)] |= 1ULL << u;
    }
    int prefix_bits = 0;
    while ((1LL << prefix_bits) < 4LL * threads && prefix_bits < ctx.n - 10) ++prefix_bits;
    ctx.low_bits = ctx.n - prefix_bits;
    return ctx;
}

inline VertexSubset mask_to_subset(std::uint64_t mask) {
    VertexSubset subset;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) subset.push_back(v);
    return subset;
}

}  // namespace detail

/// Exhaustive check of |E(V')| <= d|V'| - C(d+1,2) over all subsets of size
/// >= d. Blocks of the subset space are scanned in parallel with cooperative
/// early exit; on failure the witness is re-derived by a deterministic
/// canonical-order re-scan, so the reported witness and count are independent
/// of the parallelism degree.
inline Condition2Report check_condition2(const Graph& g, int d, const MaxwellOptions& opt = {}) {
    const int n = g.vertex_count();
    if (n < d) throw std::invalid_argument("check_condition2: graph has fewer than d vertices");
    if (n > opt.subset_cap)
        throw std::invalid_argument("check_condition2: " + std::to_string(n) +
                                    " vertices exceeds the enumeration cap of " +
                                    std::to_string(opt.subset_cap) + "; raise the cap to override");
    if (n > 63) throw std::invalid_argument("check_condition2: more than 63 vertices unsupported");

    int threads = opt.parallelism > 0 ? opt.parallelism
                                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    const detail::SubsetScanContext ctx = detail::make_scan_context(g, d, threads);
    const std::uint64_t block_count = 1ULL << (ctx.n - ctx.low_bits);

    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> first_bad_block{block_count};
    std::vector<unsigned long long> checked_per_worker(static_cast<size_t>(threads), 0);

    auto worker = [&](int w) {
        while (true) {
            const std::uint64_t block = next_block.fetch_add(1, std::memory_order_relaxed);
            if (block >= block_count) return;
            if (stop.load(std::memory_order_relaxed) &&
                block > first_bad_block.load(std::memory_order_relaxed))
                return;
            auto violation =
                detail::scan_block(ctx, block, checked_per_worker[static_cast<size_t>(w)], &stop);
            if (violation) {
                std::uint64_t prev = first_bad_block.load(std::memory_order_relaxed);
                while (block < prev &&
                       !first_bad_block.compare_exchange_weak(prev, block, std::memory_order_relaxed)) {
                }
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    Condition2Report report;
    report.ran = true;
    const std::uint64_t bad_block = first_bad_block.load();
    if (bad_block == block_count) {
        report.pass = true;
        for (auto c : checked_per_worker) report.subsets_checked += c;
        return report;
    }

    // Canonical re-scan: earlier blocks may have been cut short by the stop
    // signal, so walk blocks 0..bad_block in order for the first violation.
    report.pass = false;
    unsigned long long checked = 0;
    for (std::uint64_t block = 0; block <= bad_block; ++block) {
        if (auto violation = detail::scan_block(ctx, block, checked)) {
            report.witness = detail::mask_to_subset(violation->mask);
            report.witness_edge_count = violation->edge_count;
            break;
        }
    }
    report.subsets_checked = checked;
    return report;
}

/// Both Maxwell counting conditions. The subset check is skipped (reported as
/// not run) when the total count already fails, unless forced.
inline MaxwellReport check_maxwell(const Graph& g, int d, const MaxwellOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    MaxwellReport report;
    report.d = d;
    report.condition1 = check_condition1(g, d);
    if (report.condition1.pass || opt.force_condition2)
        report.condition2 = check_condition2(g, d, opt);
    report.pass = report.condition1.pass && report.condition2.ran && report.condition2.pass;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace hb
