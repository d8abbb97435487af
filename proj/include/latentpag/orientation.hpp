#pragma once

#include <map>
#include <vector>

#include "latentpag/mixed_graph.hpp"
#include "latentpag/sepset.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

/// Verdict of the conservative triple classification.
enum class TripleStatus : std::uint8_t {
    UnambiguousCollider,
    UnambiguousNonCollider,
    Ambiguous,
};

using TripleStatusMap = std::map<Triple, TripleStatus>;

/// Orientation helpers shared by the FCI family and RFCI. Every edit only
/// ever replaces a Circle mark, so repeated application terminates; an edit
/// whose target mark is already fixed is skipped (first orientation wins in
/// sample runs with conflicting evidence).
///
/// When `statuses` is non-null (superconservative mode), a rule whose
/// precondition references an unshielded triple fires only if that triple is
/// not Ambiguous.

/// One sweep of rules R1-R3; true iff a mark changed.
bool apply_rules_r1_r2_r3(MixedGraph& g, const TripleStatusMap* statuses);

/// One sweep of the discriminating-path rule R4 as used by FCI (no edge
/// deletion; orients from the recorded sepsets).
bool apply_rule_r4(MixedGraph& g, const SepsetStore& sep, const TripleStatusMap* statuses);

/// One sweep of rules R5-R7 (selection bias) and R8-R10 (tail completion).
bool apply_rules_r5_to_r10(MixedGraph& g, const TripleStatusMap* statuses);

/// Fixpoint of R1-R10 on the given graph: R1-R3 to fixpoint, then R4, then
/// R5-R10, repeated until stable.
void zhang_orientation_rules(MixedGraph& g, const SepsetStore& sep,
                             const TripleStatusMap* statuses = nullptr);

/// Shortest discriminating path <theta, ..., alpha, beta, gamma> for beta,
/// given the triangle trigger: beta circle-marked towards gamma, alpha a
/// parent of gamma with an arrowhead at alpha on the alpha-beta edge.
/// Returns the whole path from theta to gamma, or empty when none exists.
/// BFS with neighbors expanded in ascending index order.
std::vector<Vertex> shortest_discriminating_path(const MixedGraph& g, Vertex alpha, Vertex beta,
                                                 Vertex gamma);

/// Sets an arrowhead at j on both edges of the triple if the current mark is
/// a circle (v-structure orientation primitive).
void orient_collider(MixedGraph& g, Vertex i, Vertex j, Vertex k);

}  // namespace latentpag
