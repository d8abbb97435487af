#pragma once

#include "latentpag/ci.hpp"
#include "latentpag/mixed_graph.hpp"
#include "latentpag/sepset.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

struct SkeletonResult {
    MixedGraph graph;
    SepsetStore sepsets;
    TripleList triples;
};

/// Step 1 shared by all algorithms: start from the complete o-o graph and
/// delete edges by level-wise conditional-independence search over subsets
/// of the adjacency sets. Ordered pairs are visited ascending
/// lexicographically within each level; candidate adjacency sets are frozen
/// at the start of each level while edge deletions apply immediately.
/// Returns the initial skeleton C1, the sepsets and the unshielded triples.
///
/// Literal transcription of the pseudocode; single-threaded reference.
SkeletonResult initial_skeleton_serial(const CiSource& ci);

/// Same contract and bit-identical output (graph, sepsets, triples and test
/// counts) as the serial reference. With threads > 1, the CI scans of one
/// level run as OpenMP tasks whose results are applied in the deterministic
/// sequential order; a pair's scan depends only on level-start state, so
/// speculation never changes the outcome.
SkeletonResult initial_skeleton(const CiSource& ci, int threads = 1);

}  // namespace latentpag
