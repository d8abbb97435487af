#include "latentpag/graph_algos.hpp"

#include <algorithm>
#include <stdexcept>

namespace latentpag {

namespace {

std::vector<std::vector<Vertex>> adjacency_lists(const MixedGraph& g) {
    int p = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(p));
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = 0; j < p; ++j)
            if (j != i && g.has_edge(i, j)) adj[static_cast<std::size_t>(i)].push_back(j);
    return adj;
}

VertexSet directed_closure(const MixedGraph& g, const VertexSet& ys, bool toward_sources) {
    int p = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    std::vector<Vertex> stack;
    for (Vertex v : ys) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < p; ++w) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            bool step = toward_sources ? g.is_directed(w, v) : g.is_directed(v, w);
            if (step) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p; ++v)
        if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return VertexSet(std::move(out));
}

}  // namespace

VertexSet ancestors(const MixedGraph& g, const VertexSet& ys) {
    return directed_closure(g, ys, /*toward_sources=*/true);
}

VertexSet descendants(const MixedGraph& g, const VertexSet& ys) {
    return directed_closure(g, ys, /*toward_sources=*/false);
}

bool m_separated(const MixedGraph& g, Vertex i, Vertex j, const VertexSet& z) {
    if (i == j) throw std::invalid_argument("m_separated: i and j must differ");
    if (z.contains(i) || z.contains(j))
        throw std::invalid_argument("m_separated: conditioning set overlaps the pair");
    int p = g.vertex_count();
    if (i < 0 || i >= p || j < 0 || j >= p) throw std::out_of_range("m_separated: vertex index");

    // v can open a collider iff it has a descendant in z.
    VertexSet anc_of_z = ancestors(g, z);

    // State (v, arrived-with-arrowhead-at-v); 2p states, BFS.
    std::vector<char> seen(static_cast<std::size_t>(p) * 2, 0);
    std::vector<std::pair<Vertex, bool>> queue;
    for (Vertex w = 0; w < p; ++w) {
        if (w == i || !g.has_edge(i, w)) continue;
        if (w == j) return false;
        bool in_arrow = g.mark_is(i, w, EdgeMark::Arrow);
        std::size_t s = static_cast<std::size_t>(w) * 2 + (in_arrow ? 1 : 0);
        if (!seen[s]) {
            seen[s] = 1;
            queue.emplace_back(w, in_arrow);
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [v, in_arrow] = queue[qi];
        for (Vertex w = 0; w < p; ++w) {
            if (w == v || !g.has_edge(v, w)) continue;
            bool out_arrow = g.mark_is(w, v, EdgeMark::Arrow);  // mark at v on (v,w)
            bool collider = in_arrow && out_arrow;
            bool open = collider ? anc_of_z.contains(v) : !z.contains(v);
            if (!open) continue;
            if (w == j) return false;
            bool next_arrow = g.mark_is(v, w, EdgeMark::Arrow);
            std::size_t s = static_cast<std::size_t>(w) * 2 + (next_arrow ? 1 : 0);
            if (!seen[s]) {
                seen[s] = 1;
                queue.emplace_back(w, next_arrow);
            }
        }
    }
    return true;
}

namespace {

struct BiccState {
    std::vector<std::vector<Vertex>> adj;
    std::vector<int> disc, low;
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> comps;
    int timer = 0;

    void emit_component(Vertex u, Vertex v) {
        std::vector<std::pair<Vertex, Vertex>> comp;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) break;
        }
        for (auto& e : comp)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
};

}  // namespace

std::vector<std::vector<std::pair<Vertex, Vertex>>> biconnected_components(const MixedGraph& g) {
    int p = g.vertex_count();
    BiccState st;
    st.adj = adjacency_lists(g);
    st.disc.assign(static_cast<std::size_t>(p), -1);
    st.low.assign(static_cast<std::size_t>(p), -1);

    // Iterative Hopcroft-Tarjan; frames carry (vertex, parent, next-neighbor index).
    struct Frame {
        Vertex v, parent;
        std::size_t next = 0;
    };
    std::vector<Frame> frames;
    for (Vertex root = 0; root < p; ++root) {
        if (st.disc[static_cast<std::size_t>(root)] != -1) continue;
        st.disc[static_cast<std::size_t>(root)] = st.low[static_cast<std::size_t>(root)] = st.timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto& nbrs = st.adj[static_cast<std::size_t>(f.v)];
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (w == f.parent) continue;
                if (st.disc[static_cast<std::size_t>(w)] == -1) {
                    st.edge_stack.emplace_back(f.v, w);
                    st.disc[static_cast<std::size_t>(w)] = st.low[static_cast<std::size_t>(w)] =
                        st.timer++;
                    frames.push_back({w, f.v, 0});
                } else if (st.disc[static_cast<std::size_t>(w)] <
                           st.disc[static_cast<std::size_t>(f.v)]) {
                    st.edge_stack.emplace_back(f.v, w);
                    st.low[static_cast<std::size_t>(f.v)] =
                        std::min(st.low[static_cast<std::size_t>(f.v)],
                                 st.disc[static_cast<std::size_t>(w)]);
                }
            } else {
                Frame done = f;
                frames.pop_back();
                if (done.parent != -1) {
                    auto& pl = st.low[static_cast<std::size_t>(done.parent)];
                    pl = std::min(pl, st.low[static_cast<std::size_t>(done.v)]);
                    if (st.low[static_cast<std::size_t>(done.v)] >=
                        st.disc[static_cast<std::size_t>(done.parent)])
                        st.emit_component(done.parent, done.v);
                }
            }
        }
    }
    std::sort(st.comps.begin(), st.comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return st.comps;
}

}  // namespace latentpag
