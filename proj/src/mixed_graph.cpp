#include "latentpag/mixed_graph.hpp"

#include <stdexcept>
#include <string>

namespace latentpag {

MixedGraph::MixedGraph(int vertex_count)
    : p_(vertex_count),
      marks_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count), 0) {
    if (vertex_count <= 0) throw std::invalid_argument("vertex_count must be positive");
}

MixedGraph MixedGraph::complete(int vertex_count, EdgeMark m) {
    MixedGraph g(vertex_count);
    for (Vertex i = 0; i < vertex_count; ++i)
        for (Vertex j = i + 1; j < vertex_count; ++j) g.add_edge(i, j, m, m);
    return g;
}

void MixedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= p_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range [0," +
                                std::to_string(p_) + ")");
}

void MixedGraph::add_edge(Vertex i, Vertex j, EdgeMark at_i, EdgeMark at_j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    at(i, j) = static_cast<std::uint8_t>(at_j);
    at(j, i) = static_cast<std::uint8_t>(at_i);
}

void MixedGraph::remove_edge(Vertex i, Vertex j) {
    check_vertex(i);
    check_vertex(j);
    at(i, j) = 0;
    at(j, i) = 0;
}

void MixedGraph::set_mark(Vertex i, Vertex j, EdgeMark at_j) {
    check_vertex(i);
    check_vertex(j);
    if (at(i, j) == 0) throw std::logic_error("set_mark on a missing edge");
    at(i, j) = static_cast<std::uint8_t>(at_j);
}

void MixedGraph::reorient_all(EdgeMark m) {
    for (auto& v : marks_)
        if (v != 0) v = static_cast<std::uint8_t>(m);
}

VertexSet MixedGraph::adjacency(Vertex i) const {
    check_vertex(i);
    std::vector<Vertex> out;
    for (Vertex j = 0; j < p_; ++j)
        if (at(i, j) != 0) out.push_back(j);
    return VertexSet(std::move(out));
}

int MixedGraph::degree(Vertex i) const {
    check_vertex(i);
    int d = 0;
    for (Vertex j = 0; j < p_; ++j)
        if (at(i, j) != 0) ++d;
    return d;
}

int MixedGraph::edge_count() const {
    int c = 0;
    for (Vertex i = 0; i < p_; ++i)
        for (Vertex j = i + 1; j < p_; ++j)
            if (at(i, j) != 0) ++c;
    return c;
}

std::vector<std::pair<Vertex, Vertex>> MixedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex i = 0; i < p_; ++i)
        for (Vertex j = i + 1; j < p_; ++j)
            if (at(i, j) != 0) out.emplace_back(i, j);
    return out;
}

}  // namespace latentpag
