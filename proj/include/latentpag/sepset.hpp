#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "latentpag/mixed_graph.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

/// Symmetric map from unordered vertex pairs to the separating set found for
/// them. The conservative variants additionally record every local
/// separating set discovered while classifying a triple.
class SepsetStore {
public:
    bool has(Vertex i, Vertex j) const { return sets_.count(key(i, j)) != 0; }
    const VertexSet& get(Vertex i, Vertex j) const;
    void set(Vertex i, Vertex j, VertexSet s);

    const std::map<std::pair<Vertex, Vertex>, VertexSet>& all() const { return sets_; }

    void record_local_sets(Vertex i, Vertex j, std::vector<VertexSet> sets) {
        local_sets_[key(i, j)] = std::move(sets);
    }
    const std::vector<VertexSet>* local_sets(Vertex i, Vertex j) const {
        auto it = local_sets_.find(key(i, j));
        return it == local_sets_.end() ? nullptr : &it->second;
    }

    friend bool operator==(const SepsetStore& a, const SepsetStore& b) {
        return a.sets_ == b.sets_;
    }

private:
    static std::pair<Vertex, Vertex> key(Vertex i, Vertex j) {
        return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    }
    std::map<std::pair<Vertex, Vertex>, VertexSet> sets_;
    std::map<std::pair<Vertex, Vertex>, std::vector<VertexSet>> local_sets_;
};

/// All unshielded triples <i, j, k> of g with i < k, ordered by (i, k, j).
TripleList unshielded_triples(const MixedGraph& g);

/// Visits the size-k subsets of pool in lexicographic order by combination
/// rank; stops early when the visitor returns true. Returns whether any
/// visit returned true. The pool must be sorted (VertexSet guarantees it).
bool for_each_subset_of_size(const VertexSet& pool, int k,
                             const std::function<bool(const VertexSet&)>& visit);

}  // namespace latentpag
