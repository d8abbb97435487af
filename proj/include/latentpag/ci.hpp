#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

#include "latentpag/latent_dag.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

/// Conditional-independence contract: answers "is X_i independent of X_j
/// given Y (u S)?" over vertices 0..vertex_count()-1. Implementations are
/// read-only after construction and safe for concurrent queries; the test
/// counter and max-conditioning-size are atomics whose interleaving is
/// unobservable.
class CiSource {
public:
    virtual ~CiSource() = default;

    virtual int vertex_count() const = 0;

    bool independent(Vertex i, Vertex j, const VertexSet& y) const;

    std::uint64_t tests_performed() const { return tests_.load(std::memory_order_relaxed); }
    int max_conditioning_size() const { return max_cond_.load(std::memory_order_relaxed); }

protected:
    virtual bool query(Vertex i, Vertex j, const VertexSet& y) const = 0;

private:
    mutable std::atomic<std::uint64_t> tests_{0};
    mutable std::atomic<int> max_cond_{0};
};

/// Exact CI relation of a faithful distribution: d-separation in the
/// underlying DAG, with the selection set implicitly added to every
/// conditioning set. Queries use observed positions 0..p-1 (the k-th
/// observed vertex of the DAG).
class DsepOracle : public CiSource {
public:
    explicit DsepOracle(LatentDag dag);

    int vertex_count() const override { return dag_.observed().size(); }
    const LatentDag& dag() const { return dag_; }

protected:
    bool query(Vertex i, Vertex j, const VertexSet& y) const override;

private:
    LatentDag dag_;
};

/// Per-run view of a shared source: fresh counters, plus an optional
/// wall-clock deadline checked before every query (throws TimeoutError once
/// it has passed). Algorithm drivers wrap their input in one of these so
/// reports carry per-run numbers even when the underlying source is reused.
class ScopedCi : public CiSource {
public:
    explicit ScopedCi(const CiSource& inner) : inner_(inner) {}
    ScopedCi(const CiSource& inner, std::chrono::steady_clock::time_point deadline)
        : inner_(inner), deadline_(deadline), has_deadline_(true) {}

    int vertex_count() const override { return inner_.vertex_count(); }

protected:
    bool query(Vertex i, Vertex j, const VertexSet& y) const override;

private:
    const CiSource& inner_;
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
};

}  // namespace latentpag
