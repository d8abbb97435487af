#pragma once

#include <utility>
#include <vector>

#include "latentpag/mixed_graph.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

enum class VertexRole : std::uint8_t {
    Observed,
    Latent,
    Selection,
};

/// DAG whose vertices are partitioned into observed / latent / selection
/// roles. Construction validates that every edge is fully directed and that
/// the graph is acyclic (by topological sort).
class LatentDag {
public:
    LatentDag(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
              std::vector<VertexRole> roles);

    const MixedGraph& graph() const { return g_; }
    const std::vector<VertexRole>& roles() const { return roles_; }
    int vertex_count() const { return g_.vertex_count(); }

    VertexRole role(Vertex v) const { return roles_[static_cast<std::size_t>(v)]; }
    const VertexSet& observed() const { return observed_; }
    const VertexSet& selection() const { return selection_; }

    const std::vector<Vertex>& parents(Vertex v) const {
        return parents_[static_cast<std::size_t>(v)];
    }
    const std::vector<Vertex>& children(Vertex v) const {
        return children_[static_cast<std::size_t>(v)];
    }

    /// All edges as (source, target) pairs, ascending by source then target.
    std::vector<std::pair<Vertex, Vertex>> directed_edges() const;

private:
    MixedGraph g_;
    std::vector<VertexRole> roles_;
    VertexSet observed_;
    VertexSet selection_;
    std::vector<std::vector<Vertex>> parents_;
    std::vector<std::vector<Vertex>> children_;
};

/// True iff some path between observed vertices i and j has every
/// non-endpoint member of Y u S as a collider and every collider with a
/// descendant in {i, j} u S. Membership of i, j themselves in Y is
/// irrelevant (endpoints are never tested).
///
/// Decided via the ancestral-separator criterion: such a path exists iff
/// i and j are d-connected given ((an(G, {i,j} u S) n Y) \ {i,j}) u S.
/// Equivalent to non-d-separability by every subset of Y, which is what the
/// test oracle checks by brute force.
bool inducing_path_exists(const LatentDag& d, Vertex i, Vertex j, const VertexSet& y);

/// Unique MAG over the observed vertices: adjacency iff an inducing path
/// relative to the observed set given S exists; arrowhead at i iff
/// i is not an ancestor of {j} u S, tail otherwise. Vertex indices of the
/// result are positions in d.observed().
MixedGraph dag_to_mag(const LatentDag& d);

}  // namespace latentpag
