#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace latentpag {

using Vertex = int;

/// Endpoint mark of an edge. Every edge type (-->, <->, ---, o-o, o--, o->)
/// is a pair of marks, one per endpoint.
enum class EdgeMark : std::uint8_t {
    Circle = 1,
    Arrow = 2,
    Tail = 3,
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : vs_(vs) { normalize(); }
    explicit VertexSet(std::vector<Vertex> vs) : vs_(std::move(vs)) { normalize(); }

    bool contains(Vertex v) const {
        return std::binary_search(vs_.begin(), vs_.end(), v);
    }
    int size() const { return static_cast<int>(vs_.size()); }
    bool empty() const { return vs_.empty(); }

    void insert(Vertex v) {
        auto it = std::lower_bound(vs_.begin(), vs_.end(), v);
        if (it == vs_.end() || *it != v) vs_.insert(it, v);
    }
    void erase(Vertex v) {
        auto it = std::lower_bound(vs_.begin(), vs_.end(), v);
        if (it != vs_.end() && *it == v) vs_.erase(it);
    }

    VertexSet with(Vertex v) const {
        VertexSet r = *this;
        r.insert(v);
        return r;
    }
    VertexSet without(Vertex v) const {
        VertexSet r = *this;
        r.erase(v);
        return r;
    }
    VertexSet set_union(const VertexSet& other) const {
        VertexSet r;
        r.vs_.reserve(vs_.size() + other.vs_.size());
        std::set_union(vs_.begin(), vs_.end(), other.vs_.begin(), other.vs_.end(),
                       std::back_inserter(r.vs_));
        return r;
    }
    VertexSet set_minus(const VertexSet& other) const {
        VertexSet r;
        std::set_difference(vs_.begin(), vs_.end(), other.vs_.begin(), other.vs_.end(),
                            std::back_inserter(r.vs_));
        return r;
    }
    VertexSet set_intersect(const VertexSet& other) const {
        VertexSet r;
        std::set_intersection(vs_.begin(), vs_.end(), other.vs_.begin(), other.vs_.end(),
                              std::back_inserter(r.vs_));
        return r;
    }
    bool subset_of(const VertexSet& other) const {
        return std::includes(other.vs_.begin(), other.vs_.end(), vs_.begin(), vs_.end());
    }

    auto begin() const { return vs_.begin(); }
    auto end() const { return vs_.end(); }
    Vertex operator[](int idx) const { return vs_[static_cast<std::size_t>(idx)]; }
    const std::vector<Vertex>& values() const { return vs_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.vs_ <=> b.vs_;
    }

private:
    void normalize() {
        std::sort(vs_.begin(), vs_.end());
        vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
    }
    std::vector<Vertex> vs_;
};

/// Unshielded triple <i, j, k>: i and k both adjacent to the middle vertex j,
/// i and k non-adjacent, stored with i < k.
struct Triple {
    Vertex i, j, k;
    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

using TripleList = std::vector<Triple>;

}  // namespace latentpag
