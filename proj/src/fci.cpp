#include "latentpag/fci.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <stdexcept>

#include "latentpag/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latentpag {

VertexSet possible_d_sep(const MixedGraph& g, Vertex i) {
    const int p = g.vertex_count();
    // BFS over ordered pairs (prev, cur); the extension predicate is local to
    // consecutive triples, so pairwise state suffices.
    std::vector<char> seen(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0);
    std::vector<char> reached(static_cast<std::size_t>(p), 0);
    std::vector<std::pair<Vertex, Vertex>> queue;
    for (Vertex k = 0; k < p; ++k) {
        if (k == i || !g.has_edge(i, k)) continue;
        seen[static_cast<std::size_t>(i) * static_cast<std::size_t>(p) + static_cast<std::size_t>(k)] = 1;
        reached[static_cast<std::size_t>(k)] = 1;
        queue.emplace_back(i, k);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [u, v] = queue[qi];
        for (Vertex w = 0; w < p; ++w) {
            if (w == v || w == u || !g.has_edge(v, w)) continue;
            bool collider = g.mark_is(u, v, EdgeMark::Arrow) && g.mark_is(w, v, EdgeMark::Arrow);
            bool triangle = g.has_edge(u, w);
            if (!collider && !triangle) continue;
            std::size_t s =
                static_cast<std::size_t>(v) * static_cast<std::size_t>(p) + static_cast<std::size_t>(w);
            if (seen[s]) continue;
            seen[s] = 1;
            if (w != i) reached[static_cast<std::size_t>(w)] = 1;
            queue.emplace_back(v, w);
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p; ++v)
        if (reached[static_cast<std::size_t>(v)]) out.push_back(v);
    return VertexSet(std::move(out));
}

VertexSet pds_path(const MixedGraph& g, Vertex i, Vertex j, const BiconnectedComponents& bicomps) {
    if (!g.has_edge(i, j)) throw std::invalid_argument("pds_path: i and j must be adjacent");
    std::pair<Vertex, Vertex> e = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    const std::vector<std::pair<Vertex, Vertex>>* comp = nullptr;
    for (const auto& c : bicomps)
        if (std::binary_search(c.begin(), c.end(), e)) {
            comp = &c;
            break;
        }
    if (!comp) throw std::logic_error("pds_path: edge not covered by the decomposition");
    std::vector<Vertex> verts;
    for (auto [a, b] : *comp) {
        verts.push_back(a);
        verts.push_back(b);
    }
    return possible_d_sep(g, i).set_intersect(VertexSet(std::move(verts)));
}

void orient_v_structures(MixedGraph& g, const SepsetStore& sep, const TripleList& triples) {
    for (const Triple& t : triples)
        if (!sep.get(t.i, t.k).contains(t.j)) orient_collider(g, t.i, t.j, t.k);
}

std::vector<TripleStatus> classify_triples_conservative(const MixedGraph& g, const CiSource& ci,
                                                        const SepsetStore& sep,
                                                        const TripleList& triples,
                                                        SepsetStore* record_into) {
    std::vector<TripleStatus> out;
    out.reserve(triples.size());
    for (const Triple& t : triples) {
        std::vector<VertexSet> found;
        for (Vertex side : {t.i, t.k}) {
            VertexSet pool = g.adjacency(side);
            for (int sz = 0; sz <= pool.size(); ++sz)
                for_each_subset_of_size(pool, sz, [&](const VertexSet& y) {
                    if (ci.independent(t.i, t.k, y)) found.push_back(y);
                    return false;  // keep scanning; we need them all
                });
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());

        bool sep_has_j = sep.get(t.i, t.k).contains(t.j);
        TripleStatus status;
        if (found.empty()) {
            // Possible: the Step-1 sepset need not be local to either
            // adjacency set. Unambiguous by definition.
            status = sep_has_j ? TripleStatus::UnambiguousNonCollider
                               : TripleStatus::UnambiguousCollider;
        } else {
            bool in_all = true, in_none = true;
            for (const VertexSet& y : found) {
                if (y.contains(t.j))
                    in_none = false;
                else
                    in_all = false;
            }
            if (in_all && sep_has_j)
                status = TripleStatus::UnambiguousNonCollider;
            else if (in_none && !sep_has_j)
                status = TripleStatus::UnambiguousCollider;
            else
                status = TripleStatus::Ambiguous;
        }
        if (record_into) record_into->record_local_sets(t.i, t.k, std::move(found));
        out.push_back(status);
    }
    return out;
}

namespace {

// Level-wise subset scan for one pair against a frozen pool, bounded by the
// cutoff (max_level < 0 means unbounded).
std::optional<VertexSet> scan_pair_levels(const CiSource& ci, Vertex i, Vertex j,
                                          const VertexSet& pool, int max_level) {
    for (int level = 0; level <= pool.size(); ++level) {
        if (max_level >= 0 && level > max_level) break;
        std::optional<VertexSet> found;
        for_each_subset_of_size(pool, level, [&](const VertexSet& y) {
            if (ci.independent(i, j, y)) {
                found = y;
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

struct PdsPools {
    std::vector<VertexSet> pds_full;
    BiconnectedComponents bicomps;
    std::vector<int> sizes;  // per-vertex max pool size for reporting
};

PdsPools build_pools(const MixedGraph& c2, const FciConfig& cfg) {
    const int p = c2.vertex_count();
    PdsPools pools;
    pools.pds_full.reserve(static_cast<std::size_t>(p));
    for (Vertex i = 0; i < p; ++i) pools.pds_full.push_back(possible_d_sep(c2, i));
    pools.sizes.assign(static_cast<std::size_t>(p), 0);
    if (cfg.pds_mode == PdsMode::Path) {
        pools.bicomps = biconnected_components(c2);
        for (Vertex i = 0; i < p; ++i) {
            int best = 0;
            for (Vertex j : c2.adjacency(i))
                best = std::max(best, pds_path(c2, i, j, pools.bicomps).size());
            pools.sizes[static_cast<std::size_t>(i)] = best;
        }
    } else {
        for (Vertex i = 0; i < p; ++i)
            pools.sizes[static_cast<std::size_t>(i)] = pools.pds_full[static_cast<std::size_t>(i)].size();
    }
    return pools;
}

VertexSet pool_for_pair(const MixedGraph& c2, const PdsPools& pools, const FciConfig& cfg,
                        Vertex i, Vertex j) {
    if (cfg.pds_mode == PdsMode::Path)
        return pds_path(c2, i, j, pools.bicomps).without(j);
    return pools.pds_full[static_cast<std::size_t>(i)].without(j);
}

int resolve_cutoff(const MixedGraph& c2, const FciConfig& cfg) {
    switch (cfg.cutoff.kind) {
        case Cutoff::Kind::None:
            return -1;
        case Cutoff::Kind::Fixed:
            return cfg.cutoff.k;
        case Cutoff::Kind::Adaptive: {
            // Skeletons of C1 and C2 coincide, so the adaptive cut-off
            // max_i(|adj(C1, X_i)| - 1) can be read off the input graph.
            int max_deg = 0;
            for (Vertex i = 0; i < c2.vertex_count(); ++i) max_deg = std::max(max_deg, c2.degree(i));
            return max_deg - 1;
        }
    }
    return -1;
}

FinalSkeletonResult finish_final_skeleton(MixedGraph g, SepsetStore sep, std::vector<int> sizes) {
    g.reorient_all(EdgeMark::Circle);
    TripleList triples = unshielded_triples(g);
    return {std::move(g), std::move(sep), std::move(triples), std::move(sizes)};
}

}  // namespace

FinalSkeletonResult final_skeleton_serial(const MixedGraph& c2, const SepsetStore& sep0,
                                          const CiSource& ci, const FciConfig& cfg) {
    const int p = c2.vertex_count();
    MixedGraph g = c2;
    SepsetStore sep = sep0;
    PdsPools pools = build_pools(c2, cfg);
    const int cutoff = resolve_cutoff(c2, cfg);
    for (Vertex i = 0; i < p; ++i) {
        VertexSet snapshot = g.adjacency(i);
        for (Vertex j : snapshot) {
            if (!g.has_edge(i, j)) continue;
            auto y = scan_pair_levels(ci, i, j, pool_for_pair(c2, pools, cfg, i, j), cutoff);
            if (y) {
                g.remove_edge(i, j);
                sep.set(i, j, std::move(*y));
            }
        }
    }
    return finish_final_skeleton(std::move(g), std::move(sep), std::move(pools.sizes));
}

FinalSkeletonResult final_skeleton(const MixedGraph& c2, const SepsetStore& sep0,
                                   const CiSource& ci, const FciConfig& cfg) {
    if (cfg.threads <= 1) return final_skeleton_serial(c2, sep0, ci, cfg);

    const int p = c2.vertex_count();
    MixedGraph g = c2;
    SepsetStore sep = sep0;
    PdsPools pools = build_pools(c2, cfg);
    const int cutoff = resolve_cutoff(c2, cfg);

    // A pair's scan reads only C2-frozen pools, so outcomes can be computed
    // speculatively. An edge is deleted only by its own two ordered pairs and
    // (i,j) with i < j comes first in the vertex-major order, so the i < j
    // scans always run; an i > j scan runs unless the reverse succeeded.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j : c2.adjacency(i)) pairs.emplace_back(i, j);
    std::vector<std::optional<VertexSet>> outcomes(pairs.size());

    auto evaluate = [&](const std::vector<std::size_t>& batch) {
        std::exception_ptr error;
        std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads) if (cfg.threads > 1)
#endif
        for (std::size_t t = 0; t < batch.size(); ++t) {
            if (failed.load(std::memory_order_relaxed)) continue;
            auto [i, j] = pairs[batch[t]];
            try {
                outcomes[batch[t]] =
                    scan_pair_levels(ci, i, j, pool_for_pair(c2, pools, cfg, i, j), cutoff);
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
    };

    std::vector<std::size_t> batch;
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if (pairs[t].first < pairs[t].second) batch.push_back(t);
    evaluate(batch);

    MixedGraph probe = g;
    for (std::size_t t : batch)
        if (outcomes[t]) probe.remove_edge(pairs[t].first, pairs[t].second);
    batch.clear();
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if (pairs[t].first > pairs[t].second && probe.has_edge(pairs[t].first, pairs[t].second))
            batch.push_back(t);
    evaluate(batch);

    for (std::size_t t = 0; t < pairs.size(); ++t) {
        auto [i, j] = pairs[t];
        if (!g.has_edge(i, j) || !outcomes[t]) continue;
        g.remove_edge(i, j);
        sep.set(i, j, std::move(*outcomes[t]));
    }
    return finish_final_skeleton(std::move(g), std::move(sep), std::move(pools.sizes));
}

Step2Result run_through_step2(const CiSource& ci, const FciConfig& cfg) {
    SkeletonResult sk = initial_skeleton(ci, cfg.threads);
    MixedGraph c2 = sk.graph;
    TripleList ambiguous;
    if (cfg.conservative != ConservativeMode::Off) {
        auto status = classify_triples_conservative(c2, ci, sk.sepsets, sk.triples, &sk.sepsets);
        for (std::size_t t = 0; t < sk.triples.size(); ++t) {
            if (status[t] == TripleStatus::Ambiguous)
                ambiguous.push_back(sk.triples[t]);
            else if (status[t] == TripleStatus::UnambiguousCollider)
                orient_collider(c2, sk.triples[t].i, sk.triples[t].j, sk.triples[t].k);
        }
    } else {
        orient_v_structures(c2, sk.sepsets, sk.triples);
    }
    return {std::move(c2), std::move(sk.sepsets), std::move(sk.triples), std::move(ambiguous)};
}

std::vector<int> pds_pool_sizes(const MixedGraph& c2, PdsMode mode) {
    FciConfig cfg;
    cfg.pds_mode = mode;
    return build_pools(c2, cfg).sizes;
}

RunReport run_fci(const CiSource& raw, const FciConfig& cfg, FciTrace* trace,
                  std::optional<std::chrono::steady_clock::time_point> deadline) {
    const auto t0 = std::chrono::steady_clock::now();
    const int p = raw.vertex_count();
    ScopedCi ci = deadline ? ScopedCi(raw, *deadline) : ScopedCi(raw);
    RunReport report{MixedGraph(p)};
    std::set<Triple> ambiguous;
    try {
        // Steps 1-2. The skeletons of C1 and C2 coincide, so the trace
        // adjacency sets can be read off C2.
        Step2Result s2 = run_through_step2(ci, cfg);
        ambiguous.insert(s2.ambiguous.begin(), s2.ambiguous.end());
        if (trace) {
            trace->adj_c1.clear();
            trace->pds_c2.clear();
            for (Vertex i = 0; i < p; ++i) {
                trace->adj_c1.push_back(s2.c2.adjacency(i));
                trace->pds_c2.push_back(possible_d_sep(s2.c2, i));
            }
        }

        // Step 3: final skeleton over Possible-D-SEP subsets.
        FinalSkeletonResult fs = final_skeleton(s2.c2, s2.sepsets, ci, cfg);
        report.pds_sizes = fs.pds_sizes;
        for (int s : fs.pds_sizes) report.max_pds = std::max(report.max_pds, s);

        // Step 4: v-structures on the final skeleton.
        TripleStatusMap step5_statuses;
        bool superconservative = cfg.conservative == ConservativeMode::Step2And4;
        if (superconservative) {
            auto status = classify_triples_conservative(fs.graph, ci, fs.sepsets, fs.triples,
                                                        &fs.sepsets);
            for (std::size_t t = 0; t < fs.triples.size(); ++t) {
                step5_statuses[fs.triples[t]] = status[t];
                if (status[t] == TripleStatus::Ambiguous)
                    ambiguous.insert(fs.triples[t]);
                else if (status[t] == TripleStatus::UnambiguousCollider)
                    orient_collider(fs.graph, fs.triples[t].i, fs.triples[t].j, fs.triples[t].k);
            }
        } else {
            orient_v_structures(fs.graph, fs.sepsets, fs.triples);
        }

        // Step 5: Zhang's orientation rules.
        zhang_orientation_rules(fs.graph, fs.sepsets,
                                superconservative ? &step5_statuses : nullptr);

        report.pag = std::move(fs.graph);
        report.sepsets = std::move(fs.sepsets);
    } catch (const TimeoutError&) {
        report.timed_out = true;
    }
    report.ambiguous_triples.assign(ambiguous.begin(), ambiguous.end());
    report.ci_tests = ci.tests_performed();
    report.max_conditioning_size = ci.max_conditioning_size();
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace latentpag
