#include "latentpag/sepset.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace latentpag {

const VertexSet& SepsetStore::get(Vertex i, Vertex j) const {
    auto it = sets_.find(key(i, j));
    if (it == sets_.end())
        throw std::logic_error("missing sepset for pair (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
    return it->second;
}

void SepsetStore::set(Vertex i, Vertex j, VertexSet s) {
    if (s.contains(i) || s.contains(j))
        throw std::invalid_argument("sepset must not contain its own pair");
    sets_[key(i, j)] = std::move(s);
}

TripleList unshielded_triples(const MixedGraph& g) {
    TripleList out;
    const int p = g.vertex_count();
    for (Vertex i = 0; i < p; ++i) {
        for (Vertex k = i + 1; k < p; ++k) {
            if (g.has_edge(i, k)) continue;
            for (Vertex j = 0; j < p; ++j) {
                if (j == i || j == k) continue;
                if (g.has_edge(i, j) && g.has_edge(j, k)) out.push_back({i, j, k});
            }
        }
    }
    return out;
}

bool for_each_subset_of_size(const VertexSet& pool, int k,
                             const std::function<bool(const VertexSet&)>& visit) {
    const int m = pool.size();
    if (k < 0 || k > m) return false;
    if (k == 0) return visit(VertexSet{});
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t;
    std::vector<Vertex> buf(static_cast<std::size_t>(k));
    while (true) {
        for (int t = 0; t < k; ++t) buf[static_cast<std::size_t>(t)] = pool[idx[static_cast<std::size_t>(t)]];
        if (visit(VertexSet(buf))) return true;
        // advance to the next combination
        int t = k - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - k + t) --t;
        if (t < 0) return false;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u)
            idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
}

}  // namespace latentpag
