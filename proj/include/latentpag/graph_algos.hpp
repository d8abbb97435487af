#pragma once

#include <utility>
#include <vector>

#include "latentpag/mixed_graph.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

/// Reflexive-transitive ancestors of ys over fully directed edges
/// (tail at source, arrow at target); circles and bidirected edges do not
/// contribute. Includes ys itself.
VertexSet ancestors(const MixedGraph& g, const VertexSet& ys);

/// Reflexive-transitive descendants over fully directed edges.
VertexSet descendants(const MixedGraph& g, const VertexSet& ys);

/// m-separation of i and j by z: every path is blocked in the sense that it
/// contains a non-collider in z, or a collider with no descendant in z.
/// Works on ancestral graphs; d-separation on a DAG is the special case.
/// Implemented as reachability over (vertex, arrived-with-arrowhead) states
/// with a precomputed has-descendant-in-z table.
bool m_separated(const MixedGraph& g, Vertex i, Vertex j, const VertexSet& z);

/// Maximal biconnected components of the skeleton as edge sets, each edge as
/// (i, j) with i < j. The edge sets partition the edges; components are
/// sorted by their smallest edge, edges sorted within a component.
std::vector<std::vector<std::pair<Vertex, Vertex>>> biconnected_components(const MixedGraph& g);

}  // namespace latentpag
