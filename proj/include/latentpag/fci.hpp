#pragma once

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "latentpag/ci.hpp"
#include "latentpag/graph_algos.hpp"
#include "latentpag/mixed_graph.hpp"
#include "latentpag/orientation.hpp"
#include "latentpag/report.hpp"
#include "latentpag/sepset.hpp"
#include "latentpag/skeleton.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

enum class PdsMode { Full, Path };
enum class ConservativeMode { Off, Step2, Step2And4 };

struct Cutoff {
    enum class Kind { None, Adaptive, Fixed };
    Kind kind = Kind::None;
    int k = 0;

    static Cutoff none() { return {}; }
    static Cutoff adaptive() { return {Kind::Adaptive, 0}; }
    static Cutoff fixed(int k) { return {Kind::Fixed, k}; }
};

struct FciConfig {
    PdsMode pds_mode = PdsMode::Full;
    ConservativeMode conservative = ConservativeMode::Off;
    Cutoff cutoff = Cutoff::none();
    int threads = 1;
};

/// Possible-D-SEP of i: all k reachable from i along a path whose every
/// interior vertex is a collider on it or the middle of a triangle. Expects a
/// graph carrying only o-o, o->, <-> edges (the post-v-structure graph C2).
/// Excludes i itself.
VertexSet possible_d_sep(const MixedGraph& g, Vertex i);

using BiconnectedComponents = std::vector<std::vector<std::pair<Vertex, Vertex>>>;

/// Path-restricted Possible-D-SEP: pds(g, i) intersected with the vertices of
/// the unique biconnected component containing the edge i-j. Throws if i and
/// j are not adjacent.
VertexSet pds_path(const MixedGraph& g, Vertex i, Vertex j, const BiconnectedComponents& bicomps);

/// V-structure orientation: for each listed triple with j not in
/// sepset(i, k), put arrowheads at j on both edges.
void orient_v_structures(MixedGraph& g, const SepsetStore& sep, const TripleList& triples);

/// Conservative triple classification: searches every subset of both
/// endpoint adjacency sets for separating sets and labels the triple
/// Unambiguous (all found sets and the stored sepset agree about j, or no
/// set was found) or Ambiguous. Found sets are recorded in the store's
/// local-set extension.
std::vector<TripleStatus> classify_triples_conservative(const MixedGraph& g, const CiSource& ci,
                                                        const SepsetStore& sep,
                                                        const TripleList& triples,
                                                        SepsetStore* record_into = nullptr);

struct FinalSkeletonResult {
    MixedGraph graph;
    SepsetStore sepsets;
    TripleList triples;
    std::vector<int> pds_sizes;  // per-vertex max conditioning-pool size
};

/// State after Steps 1-2 (initial skeleton + v-structure orientation,
/// conservative per config). Exposed so the complexity driver max-pds can be
/// measured without paying for Step 3.
struct Step2Result {
    MixedGraph c2;
    SepsetStore sepsets;
    TripleList triples;
    TripleList ambiguous;
};

Step2Result run_through_step2(const CiSource& ci, const FciConfig& cfg);

/// Per-vertex max Possible-D-SEP size (pds or pds_path per mode) of a
/// post-Step-2 graph.
std::vector<int> pds_pool_sizes(const MixedGraph& c2, PdsMode mode);

/// Step 3: searches subsets of Possible-D-SEP (or pds_path, or subsets up to
/// the cutoff) for further separating sets, removes the edges found, then
/// reorients everything as o-o. Pools are computed once from the input graph
/// C2. Serial reference plus a speculation-based parallel kernel with
/// identical output.
FinalSkeletonResult final_skeleton_serial(const MixedGraph& c2, const SepsetStore& sep,
                                          const CiSource& ci, const FciConfig& cfg);
FinalSkeletonResult final_skeleton(const MixedGraph& c2, const SepsetStore& sep,
                                   const CiSource& ci, const FciConfig& cfg);

/// Intermediates recorded from an oracle run for later analysis
/// (scenario classification needs C1 adjacencies and C2 pds sets).
struct FciTrace {
    std::vector<VertexSet> adj_c1;
    std::vector<VertexSet> pds_c2;  // full-definition pds regardless of pds_mode
};

/// The full FCI family pipeline: initial skeleton, v-structures
/// (conservative per config), final skeleton (pds variant / cutoff per
/// config), v-structures again, then orientation rules R1-R10.
RunReport run_fci(const CiSource& ci, const FciConfig& cfg, FciTrace* trace = nullptr,
                  std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace latentpag
