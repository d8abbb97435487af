#include "latentpag/orientation.hpp"

#include <algorithm>
#include <initializer_list>

namespace latentpag {

namespace {

// Mark AT vertex `at` on the edge between `at` and `other`.
bool mark_at_is(const MixedGraph& g, Vertex at, Vertex other, EdgeMark m) {
    return g.mark_is(other, at, m);
}

bool is_circle_circle(const MixedGraph& g, Vertex a, Vertex b) {
    return g.mark_is(a, b, EdgeMark::Circle) && g.mark_is(b, a, EdgeMark::Circle);
}

bool is_undirected(const MixedGraph& g, Vertex a, Vertex b) {
    return g.mark_is(a, b, EdgeMark::Tail) && g.mark_is(b, a, EdgeMark::Tail);
}

// Potentially directed step u -> w: no arrowhead at u, no tail at w.
bool pd_step(const MixedGraph& g, Vertex u, Vertex w) {
    return g.has_edge(u, w) && !mark_at_is(g, u, w, EdgeMark::Arrow) &&
           !mark_at_is(g, w, u, EdgeMark::Tail);
}

struct MarkWrite {
    Vertex at, other;
    EdgeMark m;
};

// All-or-nothing orientation of a rule instance. A write is admissible when
// the target mark already equals the desired one or is still a circle;
// otherwise the whole instance is skipped. Marks only ever change away from
// Circle, which bounds the number of rule firings.
bool try_orient(MixedGraph& g, std::initializer_list<MarkWrite> writes) {
    for (const auto& w : writes) {
        if (!g.has_edge(w.at, w.other)) return false;
        if (!mark_at_is(g, w.at, w.other, w.m) && !mark_at_is(g, w.at, w.other, EdgeMark::Circle))
            return false;
    }
    bool changed = false;
    for (const auto& w : writes) {
        if (!mark_at_is(g, w.at, w.other, w.m)) {
            g.set_mark(w.other, w.at, w.m);
            changed = true;
        }
    }
    return changed;
}

bool triple_blocked(const TripleStatusMap* statuses, Vertex x, Vertex mid, Vertex z) {
    if (!statuses) return false;
    Triple t{std::min(x, z), mid, std::max(x, z)};
    auto it = statuses->find(t);
    return it != statuses->end() && it->second == TripleStatus::Ambiguous;
}

// R1: a *-> b o-* c with a, c non-adjacent  =>  b -> c.
bool rule_r1(MixedGraph& g, const TripleStatusMap* statuses) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex b = 0; b < p; ++b)
        for (Vertex a = 0; a < p; ++a) {
            if (a == b || !mark_at_is(g, b, a, EdgeMark::Arrow)) continue;
            for (Vertex c = 0; c < p; ++c) {
                if (c == a || c == b || g.has_edge(a, c)) continue;
                if (!g.has_edge(b, c) || !mark_at_is(g, b, c, EdgeMark::Circle)) continue;
                if (triple_blocked(statuses, a, b, c)) continue;
                changed |= try_orient(g, {{b, c, EdgeMark::Tail}, {c, b, EdgeMark::Arrow}});
            }
        }
    return changed;
}

// R2: (a -> b *-> c or a *-> b -> c) and a *-o c  =>  a *-> c.
bool rule_r2(MixedGraph& g, const TripleStatusMap*) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex a = 0; a < p; ++a)
        for (Vertex c = 0; c < p; ++c) {
            if (a == c || !g.has_edge(a, c) || !mark_at_is(g, c, a, EdgeMark::Circle)) continue;
            for (Vertex b = 0; b < p; ++b) {
                if (b == a || b == c || !g.has_edge(a, b) || !g.has_edge(b, c)) continue;
                bool chain1 = g.is_directed(a, b) && mark_at_is(g, c, b, EdgeMark::Arrow);
                bool chain2 = mark_at_is(g, b, a, EdgeMark::Arrow) && g.is_directed(b, c);
                if (chain1 || chain2) {
                    changed |= try_orient(g, {{c, a, EdgeMark::Arrow}});
                    break;
                }
            }
        }
    return changed;
}

// R3: a *-> b <-* c, a *-o d o-* c, a, c non-adjacent, d *-o b  =>  d *-> b.
bool rule_r3(MixedGraph& g, const TripleStatusMap* statuses) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex b = 0; b < p; ++b)
        for (Vertex d = 0; d < p; ++d) {
            if (d == b || !g.has_edge(d, b) || !mark_at_is(g, b, d, EdgeMark::Circle)) continue;
            for (Vertex a = 0; a < p; ++a) {
                if (a == b || a == d) continue;
                if (!g.has_edge(a, b) || !mark_at_is(g, b, a, EdgeMark::Arrow)) continue;
                if (!g.has_edge(a, d) || !mark_at_is(g, d, a, EdgeMark::Circle)) continue;
                for (Vertex c = a + 1; c < p; ++c) {
                    if (c == b || c == d || g.has_edge(a, c)) continue;
                    if (!g.has_edge(c, b) || !mark_at_is(g, b, c, EdgeMark::Arrow)) continue;
                    if (!g.has_edge(c, d) || !mark_at_is(g, d, c, EdgeMark::Circle)) continue;
                    if (triple_blocked(statuses, a, d, c)) continue;
                    changed |= try_orient(g, {{b, d, EdgeMark::Arrow}});
                }
            }
        }
    return changed;
}

// R5: a o-o b with an uncovered circle path <a, c, ..., d, b>, a,d and b,c
// non-adjacent  =>  a - b and every path edge undirected.
bool circle_path_dfs(const MixedGraph& g, Vertex a, Vertex b, Vertex prev, Vertex cur,
                     std::vector<Vertex>& path, std::vector<char>& on_path) {
    const int p = g.vertex_count();
    for (Vertex w = 0; w < p; ++w) {
        if (w == prev || w == cur || w == a) continue;
        if (!g.has_edge(cur, w) || !is_circle_circle(g, cur, w)) continue;
        if (g.has_edge(prev, w)) continue;  // covered triple <prev, cur, w>
        if (w == b) {
            if (g.has_edge(cur, a)) continue;  // d must be non-adjacent to a
            path.push_back(b);
            return true;
        }
        if (on_path[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        if (circle_path_dfs(g, a, b, cur, w, path, on_path)) return true;
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

bool rule_r5(MixedGraph& g, const TripleStatusMap*) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex a = 0; a < p; ++a)
        for (Vertex b = a + 1; b < p; ++b) {
            if (!g.has_edge(a, b) || !is_circle_circle(g, a, b)) continue;
            for (Vertex c = 0; c < p; ++c) {
                if (c == a || c == b || g.has_edge(c, b)) continue;
                if (!g.has_edge(a, c) || !is_circle_circle(g, a, c)) continue;
                std::vector<Vertex> path{a, c};
                std::vector<char> on_path(static_cast<std::size_t>(p), 0);
                on_path[static_cast<std::size_t>(a)] = on_path[static_cast<std::size_t>(c)] = 1;
                if (!circle_path_dfs(g, a, b, a, c, path, on_path)) continue;
                changed |= try_orient(g, {{a, b, EdgeMark::Tail}, {b, a, EdgeMark::Tail}});
                for (std::size_t t = 0; t + 1 < path.size(); ++t)
                    changed |= try_orient(g, {{path[t], path[t + 1], EdgeMark::Tail},
                                              {path[t + 1], path[t], EdgeMark::Tail}});
                break;
            }
        }
    return changed;
}

// R6: a - b o-* c  =>  b -* c (a, c need not be non-adjacent).
bool rule_r6(MixedGraph& g, const TripleStatusMap*) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex b = 0; b < p; ++b) {
        bool has_undirected = false;
        for (Vertex a = 0; a < p && !has_undirected; ++a)
            if (a != b && g.has_edge(a, b) && is_undirected(g, a, b)) has_undirected = true;
        if (!has_undirected) continue;
        for (Vertex c = 0; c < p; ++c) {
            if (c == b || !g.has_edge(b, c) || !mark_at_is(g, b, c, EdgeMark::Circle)) continue;
            changed |= try_orient(g, {{b, c, EdgeMark::Tail}});
        }
    }
    return changed;
}

// R7: a -o b o-* c, a, c non-adjacent  =>  b -* c.
bool rule_r7(MixedGraph& g, const TripleStatusMap* statuses) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex b = 0; b < p; ++b)
        for (Vertex a = 0; a < p; ++a) {
            if (a == b || !g.has_edge(a, b)) continue;
            if (!mark_at_is(g, a, b, EdgeMark::Tail) || !mark_at_is(g, b, a, EdgeMark::Circle))
                continue;
            for (Vertex c = 0; c < p; ++c) {
                if (c == a || c == b || g.has_edge(a, c)) continue;
                if (!g.has_edge(b, c) || !mark_at_is(g, b, c, EdgeMark::Circle)) continue;
                if (triple_blocked(statuses, a, b, c)) continue;
                changed |= try_orient(g, {{b, c, EdgeMark::Tail}});
            }
        }
    return changed;
}

// R8: (a -> b -> c or a -o b -> c) and a o-> c  =>  a -> c.
bool rule_r8(MixedGraph& g, const TripleStatusMap*) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex a = 0; a < p; ++a)
        for (Vertex c = 0; c < p; ++c) {
            if (a == c || !g.has_edge(a, c)) continue;
            if (!mark_at_is(g, a, c, EdgeMark::Circle) || !mark_at_is(g, c, a, EdgeMark::Arrow))
                continue;
            for (Vertex b = 0; b < p; ++b) {
                if (b == a || b == c || !g.has_edge(a, b) || !g.is_directed(b, c)) continue;
                bool first = g.is_directed(a, b);
                bool second = mark_at_is(g, a, b, EdgeMark::Tail) &&
                              mark_at_is(g, b, a, EdgeMark::Circle);
                if (first || second) {
                    changed |= try_orient(g, {{a, c, EdgeMark::Tail}});
                    break;
                }
            }
        }
    return changed;
}

// Uncovered potentially directed path search used by R9/R10. Walks from
// `cur` (reached from `prev`) toward `target`; interior vertices distinct.
bool uncovered_pd_dfs(const MixedGraph& g, Vertex target, Vertex prev, Vertex cur,
                      std::vector<char>& on_path) {
    const int p = g.vertex_count();
    for (Vertex w = 0; w < p; ++w) {
        if (w == prev || w == cur) continue;
        if (!pd_step(g, cur, w)) continue;
        if (g.has_edge(prev, w)) continue;  // covered triple
        if (w == target) return true;
        if (on_path[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        if (uncovered_pd_dfs(g, target, cur, w, on_path)) {
            on_path[static_cast<std::size_t>(w)] = 0;
            return true;
        }
        on_path[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

// R9: a o-> c and an uncovered p.d. path <a, b, ..., c> with b, c
// non-adjacent  =>  a -> c.
bool rule_r9(MixedGraph& g, const TripleStatusMap*) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex a = 0; a < p; ++a)
        for (Vertex c = 0; c < p; ++c) {
            if (a == c || !g.has_edge(a, c)) continue;
            if (!mark_at_is(g, a, c, EdgeMark::Circle) || !mark_at_is(g, c, a, EdgeMark::Arrow))
                continue;
            for (Vertex b = 0; b < p; ++b) {
                if (b == a || b == c || g.has_edge(b, c) || !pd_step(g, a, b)) continue;
                std::vector<char> on_path(static_cast<std::size_t>(p), 0);
                on_path[static_cast<std::size_t>(a)] = on_path[static_cast<std::size_t>(b)] = 1;
                if (uncovered_pd_dfs(g, c, a, b, on_path)) {
                    changed |= try_orient(g, {{a, c, EdgeMark::Tail}});
                    break;
                }
            }
        }
    return changed;
}

// Collects the parents of `gamma` reachable from `a` along uncovered p.d.
// paths whose first step is `first`.
void collect_pd_reachable(const MixedGraph& g, const std::vector<char>& parents, Vertex prev,
                          Vertex cur, std::vector<char>& on_path, std::vector<char>& reached) {
    const int p = g.vertex_count();
    for (Vertex w = 0; w < p; ++w) {
        if (w == prev || w == cur) continue;
        if (!pd_step(g, cur, w)) continue;
        if (g.has_edge(prev, w)) continue;
        if (on_path[static_cast<std::size_t>(w)]) continue;
        if (parents[static_cast<std::size_t>(w)]) reached[static_cast<std::size_t>(w)] = 1;
        on_path[static_cast<std::size_t>(w)] = 1;
        collect_pd_reachable(g, parents, cur, w, on_path, reached);
        on_path[static_cast<std::size_t>(w)] = 0;
    }
}

// R10: a o-> c, b -> c <- d, uncovered p.d. paths from a to b and to d whose
// first vertices mu, omega are distinct and non-adjacent  =>  a -> c.
bool rule_r10(MixedGraph& g, const TripleStatusMap*) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex a = 0; a < p; ++a)
        for (Vertex c = 0; c < p; ++c) {
            if (a == c || !g.has_edge(a, c)) continue;
            if (!mark_at_is(g, a, c, EdgeMark::Circle) || !mark_at_is(g, c, a, EdgeMark::Arrow))
                continue;
            std::vector<char> parents(static_cast<std::size_t>(p), 0);
            int n_parents = 0;
            for (Vertex x = 0; x < p; ++x)
                if (x != a && x != c && g.is_directed(x, c)) {
                    parents[static_cast<std::size_t>(x)] = 1;
                    ++n_parents;
                }
            if (n_parents < 2) continue;

            // what each admissible first step can reach among the parents
            std::vector<std::vector<char>> reach;
            std::vector<Vertex> firsts;
            for (Vertex mu = 0; mu < p; ++mu) {
                if (mu == a || mu == c || !pd_step(g, a, mu)) continue;
                std::vector<char> reached(static_cast<std::size_t>(p), 0);
                if (parents[static_cast<std::size_t>(mu)]) reached[static_cast<std::size_t>(mu)] = 1;
                std::vector<char> on_path(static_cast<std::size_t>(p), 0);
                on_path[static_cast<std::size_t>(a)] = on_path[static_cast<std::size_t>(mu)] = 1;
                collect_pd_reachable(g, parents, a, mu, on_path, reached);
                firsts.push_back(mu);
                reach.push_back(std::move(reached));
            }
            bool fired = false;
            for (std::size_t s = 0; s < firsts.size() && !fired; ++s)
                for (std::size_t t = 0; t < firsts.size() && !fired; ++t) {
                    if (s == t) continue;
                    Vertex mu = firsts[s], omega = firsts[t];
                    if (g.has_edge(mu, omega)) continue;
                    for (Vertex beta = 0; beta < p && !fired; ++beta) {
                        if (!reach[s][static_cast<std::size_t>(beta)]) continue;
                        for (Vertex theta = 0; theta < p && !fired; ++theta) {
                            if (theta == beta || !reach[t][static_cast<std::size_t>(theta)])
                                continue;
                            fired = true;
                        }
                    }
                }
            if (fired) changed |= try_orient(g, {{a, c, EdgeMark::Tail}});
        }
    return changed;
}

}  // namespace

void orient_collider(MixedGraph& g, Vertex i, Vertex j, Vertex k) {
    try_orient(g, {{j, i, EdgeMark::Arrow}});
    try_orient(g, {{j, k, EdgeMark::Arrow}});
}

std::vector<Vertex> shortest_discriminating_path(const MixedGraph& g, Vertex alpha, Vertex beta,
                                                 Vertex gamma) {
    const int p = g.vertex_count();
    // Trigger shape; the callers scan for it, re-checked here for safety.
    if (!g.has_edge(beta, gamma) || !mark_at_is(g, beta, gamma, EdgeMark::Circle)) return {};
    if (!g.is_directed(alpha, gamma) || !mark_at_is(g, alpha, beta, EdgeMark::Arrow)) return {};

    // BFS backward from alpha. Interior vertices must be colliders on the
    // path and parents of gamma; the terminal vertex theta is any
    // predecessor not adjacent to gamma.
    std::vector<Vertex> parent(static_cast<std::size_t>(p), -1);
    std::vector<char> visited(static_cast<std::size_t>(p), 0);
    visited[static_cast<std::size_t>(alpha)] = visited[static_cast<std::size_t>(beta)] = 1;
    visited[static_cast<std::size_t>(gamma)] = 1;
    std::vector<Vertex> queue{alpha};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex v = queue[qi];
        for (Vertex u = 0; u < p; ++u) {
            if (visited[static_cast<std::size_t>(u)] || !g.has_edge(u, v)) continue;
            if (!mark_at_is(g, v, u, EdgeMark::Arrow)) continue;  // v must stay a collider
            if (!g.has_edge(u, gamma)) {
                // found theta; reconstruct <theta, ..., alpha, beta, gamma>
                std::vector<Vertex> path{u};
                for (Vertex w = v; w != -1; w = parent[static_cast<std::size_t>(w)])
                    path.push_back(w);
                path.push_back(beta);
                path.push_back(gamma);
                return path;
            }
            if (g.is_directed(u, gamma) && mark_at_is(g, u, v, EdgeMark::Arrow)) {
                visited[static_cast<std::size_t>(u)] = 1;
                parent[static_cast<std::size_t>(u)] = v;
                queue.push_back(u);
            }
        }
    }
    return {};
}

bool apply_rules_r1_r2_r3(MixedGraph& g, const TripleStatusMap* statuses) {
    bool changed = false;
    changed |= rule_r1(g, statuses);
    changed |= rule_r2(g, statuses);
    changed |= rule_r3(g, statuses);
    return changed;
}

bool apply_rule_r4(MixedGraph& g, const SepsetStore& sep, const TripleStatusMap* statuses) {
    bool changed = false;
    const int p = g.vertex_count();
    for (Vertex beta = 0; beta < p; ++beta)
        for (Vertex gamma = 0; gamma < p; ++gamma) {
            if (beta == gamma || !g.has_edge(beta, gamma)) continue;
            if (!mark_at_is(g, beta, gamma, EdgeMark::Circle)) continue;
            for (Vertex alpha = 0; alpha < p; ++alpha) {
                if (alpha == beta || alpha == gamma) continue;
                if (!g.has_edge(alpha, beta) || !g.is_directed(alpha, gamma)) continue;
                if (!mark_at_is(g, alpha, beta, EdgeMark::Arrow)) continue;
                auto path = shortest_discriminating_path(g, alpha, beta, gamma);
                if (path.empty()) continue;
                Vertex theta = path.front();
                if (triple_blocked(statuses, theta, path[1], gamma)) continue;
                if (!sep.has(theta, gamma)) continue;
                if (sep.get(theta, gamma).contains(beta)) {
                    changed |=
                        try_orient(g, {{beta, gamma, EdgeMark::Tail}, {gamma, beta, EdgeMark::Arrow}});
                } else {
                    changed |= try_orient(g, {{alpha, beta, EdgeMark::Arrow},
                                              {beta, alpha, EdgeMark::Arrow},
                                              {beta, gamma, EdgeMark::Arrow},
                                              {gamma, beta, EdgeMark::Arrow}});
                }
                break;  // circle at beta is consumed either way
            }
        }
    return changed;
}

bool apply_rules_r5_to_r10(MixedGraph& g, const TripleStatusMap* statuses) {
    bool changed = false;
    changed |= rule_r5(g, statuses);
    changed |= rule_r6(g, statuses);
    changed |= rule_r7(g, statuses);
    changed |= rule_r8(g, statuses);
    changed |= rule_r9(g, statuses);
    changed |= rule_r10(g, statuses);
    return changed;
}

void zhang_orientation_rules(MixedGraph& g, const SepsetStore& sep,
                             const TripleStatusMap* statuses) {
    bool changed = true;
    while (changed) {
        changed = false;
        while (apply_rules_r1_r2_r3(g, statuses)) changed = true;
        changed |= apply_rule_r4(g, sep, statuses);
        changed |= apply_rules_r5_to_r10(g, statuses);
    }
}

}  // namespace latentpag
