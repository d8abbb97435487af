#pragma once

#include <cstdint>
#include <vector>

#include "latentpag/mixed_graph.hpp"
#include "latentpag/sepset.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

/// Per-run record produced by the algorithm drivers.
struct RunReport {
    MixedGraph pag;
    SepsetStore sepsets;
    TripleList ambiguous_triples;
    std::uint64_t ci_tests = 0;
    int max_conditioning_size = 0;
    std::vector<int> pds_sizes;  // per-vertex max Possible-D-SEP size (empty for RFCI)
    int max_pds = 0;
    double wall_seconds = 0.0;
    bool timed_out = false;
    bool small_sample_fallback = false;
};

}  // namespace latentpag
