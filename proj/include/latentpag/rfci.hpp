#pragma once

#include <chrono>
#include <deque>
#include <optional>

#include "latentpag/ci.hpp"
#include "latentpag/mixed_graph.hpp"
#include "latentpag/report.hpp"
#include "latentpag/sepset.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

/// Working state of the RFCI phases: current graph, sepsets, the pending
/// unshielded-triple list M and the verified list L.
struct RfciState {
    MixedGraph graph;
    SepsetStore sepsets;
    std::deque<Triple> pending;   // M
    std::vector<Triple> verified; // L
};

/// Edge deletions performed by the RFCI phases, with the minimal separating
/// set stored for each; exposed for the sepset-minimality replay tests.
struct RfciTrace {
    struct Deletion {
        Vertex a, b;
        VertexSet sepset;
    };
    std::vector<Deletion> deletions;
};

/// Smallest-cardinality subset of `base` separating r and j (which is minimal:
/// all strictly smaller subsets were scanned first). Throws std::logic_error
/// when base itself does not separate (contract violation).
VertexSet find_minimal_sepset(const CiSource& ci, Vertex r, Vertex j, const VertexSet& base);

/// Unshielded-triple phase: checks both edges of every pending triple for
/// conditional dependence given sepset(i,k) \ {j}, deletes edges when an
/// independence surfaces (storing a minimal separating set and updating the
/// triple lists), then orients the surviving verified triples whose middle
/// vertex is outside the stored sepset.
void rfci_triple_phase(RfciState& state, const CiSource& ci, RfciTrace* trace = nullptr);

/// Orientation phase: R1-R3 to fixpoint, the modified discriminating-path
/// rule (testing every adjacent pair on a shortest discriminating path
/// against all subsets of the endpoints' sepset, re-running the triple phase
/// after deletions), then R5-R10, repeated until stable.
void rfci_orient_phase(RfciState& state, const CiSource& ci, RfciTrace* trace = nullptr);

/// The RFCI algorithm: initial skeleton, triple phase, orientation phase.
RunReport run_rfci(const CiSource& ci, RfciTrace* trace = nullptr, int threads = 1,
                   std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace latentpag
