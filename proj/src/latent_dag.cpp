#include "latentpag/latent_dag.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "latentpag/errors.hpp"
#include "latentpag/graph_algos.hpp"

namespace latentpag {

LatentDag::LatentDag(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                     std::vector<VertexRole> roles)
    : g_(vertex_count),
      roles_(std::move(roles)),
      parents_(static_cast<std::size_t>(vertex_count)),
      children_(static_cast<std::size_t>(vertex_count)) {
    if (static_cast<int>(roles_.size()) != vertex_count)
        throw std::invalid_argument("roles size must match vertex count");
    for (auto [src, dst] : edges) {
        if (g_.has_edge(src, dst))
            throw DataError("duplicate or two-way edge " + std::to_string(src) + "->" +
                            std::to_string(dst));
        g_.add_edge(src, dst, EdgeMark::Tail, EdgeMark::Arrow);
        parents_[static_cast<std::size_t>(dst)].push_back(src);
        children_[static_cast<std::size_t>(src)].push_back(dst);
    }
    // Kahn's topological sort; leftover vertices mean a directed cycle.
    std::vector<int> indeg(static_cast<std::size_t>(vertex_count), 0);
    for (Vertex v = 0; v < vertex_count; ++v)
        indeg[static_cast<std::size_t>(v)] = static_cast<int>(parents_[static_cast<std::size_t>(v)].size());
    std::vector<Vertex> order;
    for (Vertex v = 0; v < vertex_count; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) order.push_back(v);
    for (std::size_t qi = 0; qi < order.size(); ++qi)
        for (Vertex c : children_[static_cast<std::size_t>(order[qi])])
            if (--indeg[static_cast<std::size_t>(c)] == 0) order.push_back(c);
    if (static_cast<int>(order.size()) != vertex_count)
        throw DataError("graph contains a directed cycle");

    std::vector<Vertex> obs, sel;
    for (Vertex v = 0; v < vertex_count; ++v) {
        if (roles_[static_cast<std::size_t>(v)] == VertexRole::Observed) obs.push_back(v);
        if (roles_[static_cast<std::size_t>(v)] == VertexRole::Selection) sel.push_back(v);
    }
    observed_ = VertexSet(std::move(obs));
    selection_ = VertexSet(std::move(sel));
}

std::vector<std::pair<Vertex, Vertex>> LatentDag::directed_edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < vertex_count(); ++v) {
        std::vector<Vertex> cs = children_[static_cast<std::size_t>(v)];
        std::sort(cs.begin(), cs.end());
        for (Vertex c : cs) out.emplace_back(v, c);
    }
    return out;
}

bool inducing_path_exists(const LatentDag& d, Vertex i, Vertex j, const VertexSet& y) {
    if (d.role(i) != VertexRole::Observed || d.role(j) != VertexRole::Observed)
        throw std::invalid_argument("inducing_path_exists: endpoints must be observed");
    for (Vertex v : y)
        if (d.role(v) != VertexRole::Observed)
            throw std::invalid_argument("inducing_path_exists: Y must be observed");
    if (i == j) throw std::invalid_argument("inducing_path_exists: i and j must differ");
    if (d.graph().has_edge(i, j)) return true;

    // Such a path exists iff i, j are d-connected given the ancestral part of
    // Y (plus S); see header. Monotonicity in Y follows since shrinking Y can
    // only shrink the separator.
    VertexSet targets = d.selection().with(i).with(j);
    VertexSet anc = ancestors(d.graph(), targets);
    VertexSet sep = anc.set_intersect(y);
    sep.erase(i);
    sep.erase(j);
    sep = sep.set_union(d.selection());
    return !m_separated(d.graph(), i, j, sep);
}

MixedGraph dag_to_mag(const LatentDag& d) {
    const VertexSet& obs = d.observed();
    int p = obs.size();
    if (p == 0) throw std::invalid_argument("dag_to_mag: no observed vertices");
    MixedGraph mag(p);
    // Ancestor sets an(G, {b} u S) for each observed b, reused across pairs.
    std::vector<VertexSet> anc(static_cast<std::size_t>(p));
    for (int b = 0; b < p; ++b)
        anc[static_cast<std::size_t>(b)] = ancestors(d.graph(), d.selection().with(obs[b]));
    for (int a = 0; a < p; ++a) {
        for (int b = a + 1; b < p; ++b) {
            if (!inducing_path_exists(d, obs[a], obs[b], obs)) continue;
            EdgeMark at_a = anc[static_cast<std::size_t>(b)].contains(obs[a]) ? EdgeMark::Tail
                                                                              : EdgeMark::Arrow;
            EdgeMark at_b = anc[static_cast<std::size_t>(a)].contains(obs[b]) ? EdgeMark::Tail
                                                                              : EdgeMark::Arrow;
            mag.add_edge(a, b, at_a, at_b);
        }
    }
    return mag;
}

}  // namespace latentpag
