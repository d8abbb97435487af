#include "latentpag/rfci.hpp"

#include <algorithm>
#include <stdexcept>

#include "latentpag/errors.hpp"
#include "latentpag/orientation.hpp"
#include "latentpag/skeleton.hpp"

namespace latentpag {

namespace {

// Mark AT vertex `at` on the edge between `at` and `other`.
bool mark_at_is(const MixedGraph& g, Vertex at, Vertex other, EdgeMark m) {
    return g.mark_is(other, at, m);
}

std::optional<VertexSet> scan_pair_levels(const CiSource& ci, Vertex i, Vertex j,
                                          const VertexSet& pool) {
    for (int level = 0; level <= pool.size(); ++level) {
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

// Triples that lose an edge when a-b is removed: the pair appears as a
// triple edge (first-middle or middle-last).
template <typename List>
void prune_triples_with_edge(List& list, Vertex a, Vertex b) {
    auto uses_edge = [a, b](const Triple& t) {
        bool fm = (t.i == a && t.j == b) || (t.i == b && t.j == a);
        bool ml = (t.j == a && t.k == b) || (t.j == b && t.k == a);
        return fm || ml;
    };
    list.erase(std::remove_if(list.begin(), list.end(), uses_edge), list.end());
}

// Triangles over the edge a-b; they become unshielded triples once the edge
// goes away.
std::vector<Triple> triangles_over_edge(const MixedGraph& g, Vertex a, Vertex b) {
    Vertex lo = std::min(a, b), hi = std::max(a, b);
    std::vector<Triple> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == lo || v == hi) continue;
        if (g.has_edge(lo, v) && g.has_edge(v, hi)) out.push_back({lo, v, hi});
    }
    return out;
}

void delete_edge_with_sepset(RfciState& st, Vertex a, Vertex b, VertexSet sepset,
                             RfciTrace* trace) {
    st.sepsets.set(a, b, sepset);
    if (trace) trace->deletions.push_back({a, b, sepset});
    for (const Triple& t : triangles_over_edge(st.graph, a, b)) st.pending.push_back(t);
    prune_triples_with_edge(st.pending, a, b);
    prune_triples_with_edge(st.verified, a, b);
    st.graph.remove_edge(a, b);
}

}  // namespace

VertexSet find_minimal_sepset(const CiSource& ci, Vertex r, Vertex j, const VertexSet& base) {
    auto found = scan_pair_levels(ci, r, j, base);
    if (!found) throw std::logic_error("find_minimal_sepset: base set does not separate the pair");
    return *found;
}

void rfci_triple_phase(RfciState& st, const CiSource& ci, RfciTrace* trace) {
    while (!st.pending.empty()) {
        Triple t = st.pending.front();
        st.pending.pop_front();
        VertexSet base = st.sepsets.get(t.i, t.k).without(t.j);
        bool indep_ij = ci.independent(t.i, t.j, base);
        bool indep_jk = ci.independent(t.j, t.k, base);
        if (!indep_ij && !indep_jk) {
            st.verified.push_back(t);
            continue;
        }
        if (indep_ij)
            delete_edge_with_sepset(st, t.i, t.j, find_minimal_sepset(ci, t.i, t.j, base), trace);
        if (indep_jk)
            delete_edge_with_sepset(st, t.j, t.k, find_minimal_sepset(ci, t.j, t.k, base), trace);
    }
    for (const Triple& t : st.verified) {
        if (!st.graph.has_edge(t.i, t.j) || !st.graph.has_edge(t.j, t.k)) continue;
        if (!st.sepsets.get(t.i, t.k).contains(t.j)) orient_collider(st.graph, t.i, t.j, t.k);
    }
    st.verified.clear();
}

namespace {

// One pass over the discriminating-path triggers. Returns the strongest
// event that happened: 0 = nothing, 1 = marks oriented, 2 = an edge was
// deleted (callers re-scan from the start after deletions).
int discriminating_path_sweep(RfciState& st, const CiSource& ci, RfciTrace* trace) {
    MixedGraph& g = st.graph;
    const int p = g.vertex_count();
    int event = 0;
    for (Vertex l = 0; l < p; ++l)
        for (Vertex j = 0; j < p; ++j) {
            if (j == l) continue;
            for (Vertex k = 0; k < p; ++k) {
                if (k == l || k == j) continue;
                // triangle with j circle-marked towards k, l a parent of k and
                // an arrowhead at l on the l-j edge
                if (!g.has_edge(l, j) || !g.has_edge(j, k) || !g.has_edge(l, k)) continue;
                if (!mark_at_is(g, j, k, EdgeMark::Circle)) continue;
                if (!g.is_directed(l, k)) continue;
                if (!mark_at_is(g, l, j, EdgeMark::Arrow)) continue;

                auto path = shortest_discriminating_path(g, l, j, k);
                if (path.empty()) continue;
                Vertex theta = path.front();
                const VertexSet sep_ik = st.sepsets.get(theta, k);

                // Check every adjacent pair on the path against all subsets
                // of sepset(theta, k) minus the pair.
                bool deleted = false;
                for (std::size_t e = 0; e + 1 < path.size(); ++e) {
                    Vertex r = path[e], q = path[e + 1];
                    if (!g.has_edge(r, q)) continue;  // removed by a rerun below
                    auto y = scan_pair_levels(ci, r, q, sep_ik.without(r).without(q));
                    if (!y) continue;
                    // the deletion seeds M with the triangles it opened; the
                    // triple phase then reruns on exactly that list
                    delete_edge_with_sepset(st, r, q, std::move(*y), trace);
                    rfci_triple_phase(st, ci, trace);
                    deleted = true;
                }
                if (deleted) return 2;

                bool intact = true;
                for (std::size_t e = 0; e + 1 < path.size(); ++e)
                    if (!g.has_edge(path[e], path[e + 1])) intact = false;
                if (!intact) continue;

                bool changed;
                if (sep_ik.contains(j)) {
                    changed = g.mark_is(k, j, EdgeMark::Circle);
                    if (changed) {
                        g.set_mark(k, j, EdgeMark::Tail);
                        if (g.mark_is(j, k, EdgeMark::Circle)) g.set_mark(j, k, EdgeMark::Arrow);
                    }
                } else {
                    changed = false;
                    for (auto [x, y] : {std::pair{l, j}, std::pair{j, l}, std::pair{j, k},
                                        std::pair{k, j}}) {
                        if (g.mark_is(x, y, EdgeMark::Circle)) {
                            g.set_mark(x, y, EdgeMark::Arrow);
                            changed = true;
                        }
                    }
                }
                if (changed) event = std::max(event, 1);
            }
        }
    return event;
}

}  // namespace

void rfci_orient_phase(RfciState& st, const CiSource& ci, RfciTrace* trace) {
    bool outer_changed = true;
    while (outer_changed) {
        outer_changed = false;
        while (apply_rules_r1_r2_r3(st.graph, nullptr)) outer_changed = true;
        while (true) {
            int event = discriminating_path_sweep(st, ci, trace);
            if (event == 0) break;
            outer_changed = true;
        }
        if (apply_rules_r5_to_r10(st.graph, nullptr)) outer_changed = true;
    }
}

RunReport run_rfci(const CiSource& raw, RfciTrace* trace, int threads,
                   std::optional<std::chrono::steady_clock::time_point> deadline) {
    const auto t0 = std::chrono::steady_clock::now();
    const int p = raw.vertex_count();
    ScopedCi ci = deadline ? ScopedCi(raw, *deadline) : ScopedCi(raw);
    RunReport report{MixedGraph(p)};
    try {
        SkeletonResult sk = initial_skeleton(ci, threads);
        RfciState st{std::move(sk.graph), std::move(sk.sepsets),
                     std::deque<Triple>(sk.triples.begin(), sk.triples.end()), {}};
        rfci_triple_phase(st, ci, trace);
        rfci_orient_phase(st, ci, trace);
        report.pag = std::move(st.graph);
        report.sepsets = std::move(st.sepsets);
    } catch (const TimeoutError&) {
        report.timed_out = true;
    }
    report.ci_tests = ci.tests_performed();
    report.max_conditioning_size = ci.max_conditioning_size();
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace latentpag
