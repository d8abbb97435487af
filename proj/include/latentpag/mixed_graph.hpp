#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latentpag/types.hpp"

namespace latentpag {

/// Mixed graph over dense integer vertex indices. For each ordered pair
/// (i, j) with an edge, mark(i, j) is the mark at j on that edge; edge
/// presence is symmetric, the two marks need not match. Simple: at most one
/// edge per pair, no self-loops.
///
/// The storage layout matches the PAG matrix file format: entry [i][j] is
/// 0 when absent, otherwise the EdgeMark value at j.
class MixedGraph {
public:
    explicit MixedGraph(int vertex_count);

    /// Complete graph with every edge carrying `m` at both ends (o-o start
    /// graph of the skeleton phase).
    static MixedGraph complete(int vertex_count, EdgeMark m);

    int vertex_count() const { return p_; }

    bool has_edge(Vertex i, Vertex j) const { return at(i, j) != 0; }

    /// Mark at j on the edge between i and j, or nullopt when non-adjacent.
    std::optional<EdgeMark> mark(Vertex i, Vertex j) const {
        std::uint8_t m = at(i, j);
        if (m == 0) return std::nullopt;
        return static_cast<EdgeMark>(m);
    }

    /// True iff the edge i-j exists and carries `m` at j.
    bool mark_is(Vertex i, Vertex j, EdgeMark m) const {
        return at(i, j) == static_cast<std::uint8_t>(m);
    }

    /// Fully directed edge i --> j (tail at i, arrow at j).
    bool is_directed(Vertex i, Vertex j) const {
        return mark_is(j, i, EdgeMark::Tail) && mark_is(i, j, EdgeMark::Arrow);
    }

    void add_edge(Vertex i, Vertex j, EdgeMark at_i, EdgeMark at_j);
    void remove_edge(Vertex i, Vertex j);

    /// Overwrite the mark at j on the existing edge i-j.
    void set_mark(Vertex i, Vertex j, EdgeMark at_j);

    /// Reset both marks of every edge to `m`.
    void reorient_all(EdgeMark m);

    VertexSet adjacency(Vertex i) const;
    int degree(Vertex i) const;
    int edge_count() const;

    /// All edges as (i, j) with i < j, ascending.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

private:
    std::uint8_t at(Vertex i, Vertex j) const {
        return marks_[static_cast<std::size_t>(i) * static_cast<std::size_t>(p_) +
                      static_cast<std::size_t>(j)];
    }
    std::uint8_t& at(Vertex i, Vertex j) {
        return marks_[static_cast<std::size_t>(i) * static_cast<std::size_t>(p_) +
                      static_cast<std::size_t>(j)];
    }
    void check_vertex(Vertex v) const;

    int p_ = 0;
    std::vector<std::uint8_t> marks_;
};

}  // namespace latentpag
