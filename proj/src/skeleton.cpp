#include "latentpag/skeleton.hpp"

#include <atomic>
#include <exception>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latentpag {

namespace {

// First size-`level` subset of the pool (lexicographic order) separating the
// pair, or nullopt after an exhaustive scan.
std::optional<VertexSet> scan_pair(const CiSource& ci, Vertex i, Vertex j, const VertexSet& pool,
                                   int level) {
    std::optional<VertexSet> found;
    for_each_subset_of_size(pool, level, [&](const VertexSet& y) {
        if (ci.independent(i, j, y)) {
            found = y;
            return true;
        }
        return false;
    });
    return found;
}

struct LevelPlan {
    std::vector<VertexSet> frozen_adj;
    std::vector<std::pair<Vertex, Vertex>> pairs;  // eligible ordered pairs, lex ascending
};

LevelPlan plan_level(const MixedGraph& c, int level) {
    LevelPlan plan;
    const int p = c.vertex_count();
    plan.frozen_adj.reserve(static_cast<std::size_t>(p));
    for (Vertex i = 0; i < p; ++i) plan.frozen_adj.push_back(c.adjacency(i));
    for (Vertex i = 0; i < p; ++i) {
        const VertexSet& ai = plan.frozen_adj[static_cast<std::size_t>(i)];
        for (Vertex j : ai)
            if (ai.size() - 1 >= level) plan.pairs.emplace_back(i, j);
    }
    return plan;
}

using Outcome = std::optional<VertexSet>;

// Evaluates outcomes for the given pairs; a pair's scan only reads
// level-start state, so the scans can run concurrently. Worker exceptions
// are captured and rethrown after the parallel region.
void evaluate_batch(const CiSource& ci, const LevelPlan& plan,
                    const std::vector<std::size_t>& batch, int level,
                    std::vector<Outcome>& outcomes, int threads) {
    std::exception_ptr error;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
    for (std::size_t t = 0; t < batch.size(); ++t) {
        if (failed.load(std::memory_order_relaxed)) continue;
        auto [i, j] = plan.pairs[batch[t]];
        try {
            outcomes[batch[t]] =
                scan_pair(ci, i, j, plan.frozen_adj[static_cast<std::size_t>(i)].without(j), level);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    (void)threads;
}

}  // namespace

SkeletonResult initial_skeleton_serial(const CiSource& ci) {
    const int p = ci.vertex_count();
    MixedGraph c = MixedGraph::complete(p, EdgeMark::Circle);
    SepsetStore sep;
    for (int level = 0;; ++level) {
        LevelPlan plan = plan_level(c, level);
        if (plan.pairs.empty()) break;
        for (auto [i, j] : plan.pairs) {
            if (!c.has_edge(i, j)) continue;  // removed earlier in this level
            auto y =
                scan_pair(ci, i, j, plan.frozen_adj[static_cast<std::size_t>(i)].without(j), level);
            if (y) {
                c.remove_edge(i, j);
                sep.set(i, j, std::move(*y));
            }
        }
    }
    TripleList triples = unshielded_triples(c);
    return {std::move(c), std::move(sep), std::move(triples)};
}

SkeletonResult initial_skeleton(const CiSource& ci, int threads) {
    if (threads <= 1) return initial_skeleton_serial(ci);

    const int p = ci.vertex_count();
    MixedGraph c = MixedGraph::complete(p, EdgeMark::Circle);
    SepsetStore sep;
    for (int level = 0;; ++level) {
        LevelPlan plan = plan_level(c, level);
        if (plan.pairs.empty()) break;
        std::vector<Outcome> outcomes(plan.pairs.size());

        // An edge can only be removed within a level by one of its own two
        // ordered pairs, and (i,j) with i<j precedes (j,i). So every i<j scan
        // runs; an i>j scan runs unless its reverse direction succeeded.
        std::vector<std::size_t> batch;
        for (std::size_t t = 0; t < plan.pairs.size(); ++t)
            if (plan.pairs[t].first < plan.pairs[t].second) batch.push_back(t);
        evaluate_batch(ci, plan, batch, level, outcomes, threads);

        MixedGraph probe = c;
        for (std::size_t t : batch) {
            auto [i, j] = plan.pairs[t];
            if (outcomes[t]) probe.remove_edge(i, j);
        }
        batch.clear();
        for (std::size_t t = 0; t < plan.pairs.size(); ++t) {
            auto [i, j] = plan.pairs[t];
            if (i > j && probe.has_edge(i, j)) batch.push_back(t);
        }
        evaluate_batch(ci, plan, batch, level, outcomes, threads);

        // Deterministic sequential application in lexicographic pair order.
        for (std::size_t t = 0; t < plan.pairs.size(); ++t) {
            auto [i, j] = plan.pairs[t];
            if (!c.has_edge(i, j) || !outcomes[t]) continue;
            c.remove_edge(i, j);
            sep.set(i, j, std::move(*outcomes[t]));
        }
    }
    TripleList triples = unshielded_triples(c);
    return {std::move(c), std::move(sep), std::move(triples)};
}

}  // namespace latentpag
