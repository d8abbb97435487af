#include "latentpag/ci.hpp"

#include <stdexcept>

#include "latentpag/errors.hpp"
#include "latentpag/graph_algos.hpp"

namespace latentpag {

bool CiSource::independent(Vertex i, Vertex j, const VertexSet& y) const {
    if (i == j) throw std::invalid_argument("independent: i and j must differ");
    if (i < 0 || i >= vertex_count() || j < 0 || j >= vertex_count())
        throw std::out_of_range("independent: vertex index out of range");
    if (y.contains(i) || y.contains(j))
        throw std::invalid_argument("independent: conditioning set overlaps the pair");
    bool result = query(i, j, y);
    tests_.fetch_add(1, std::memory_order_relaxed);
    int sz = y.size();
    int cur = max_cond_.load(std::memory_order_relaxed);
    while (sz > cur && !max_cond_.compare_exchange_weak(cur, sz, std::memory_order_relaxed)) {
    }
    return result;
}

DsepOracle::DsepOracle(LatentDag dag) : dag_(std::move(dag)) {}

bool DsepOracle::query(Vertex i, Vertex j, const VertexSet& y) const {
    const VertexSet& obs = dag_.observed();
    VertexSet cond = dag_.selection();
    for (Vertex v : y) cond.insert(obs[v]);
    return m_separated(dag_.graph(), obs[i], obs[j], cond);
}

bool ScopedCi::query(Vertex i, Vertex j, const VertexSet& y) const {
    if (has_deadline_ && std::chrono::steady_clock::now() > deadline_) throw TimeoutError();
    return inner_.independent(i, j, y);
}

}  // namespace latentpag
