#pragma once

// DAGs and expected PAGs used as golden fixtures across the test suites.

#include "latentpag/latent_dag.hpp"
#include "latentpag/mixed_graph.hpp"

namespace latentpag::fixtures {

struct PagEdge {
    Vertex u, v;
    EdgeMark at_u, at_v;
};

inline MixedGraph make_pag(int p, std::initializer_list<PagEdge> edges) {
    MixedGraph g(p);
    for (const PagEdge& e : edges) g.add_edge(e.u, e.v, e.at_u, e.at_v);
    return g;
}

inline std::vector<VertexRole> roles_with_latents(int p, std::initializer_list<Vertex> latents) {
    std::vector<VertexRole> roles(static_cast<std::size_t>(p), VertexRole::Observed);
    for (Vertex v : latents) roles[static_cast<std::size_t>(v)] = VertexRole::Latent;
    return roles;
}

// Three observed variables with two latent common causes; the only
// conditional independence among the observed is X1 _||_ X3.
// Indices: X1..X3 = 0..2, L1 = 3, L2 = 4.
inline LatentDag three_chain_confounded_dag() {
    return LatentDag(5, {{3, 0}, {3, 1}, {4, 1}, {4, 2}}, roles_with_latents(5, {3, 4}));
}

inline MixedGraph three_chain_confounded_pag() {
    return make_pag(3, {{0, 1, EdgeMark::Circle, EdgeMark::Arrow},
                        {2, 1, EdgeMark::Circle, EdgeMark::Arrow}});
}

// Six observed variables, two latent confounders; FCI and RFCI outputs
// coincide. Indices: X1..X6 = 0..5, L1 = 6, L2 = 7.
inline LatentDag six_var_dag() {
    return LatentDag(8,
                     {{2, 1}, {2, 3}, {6, 1}, {6, 0}, {7, 3}, {7, 4}, {1, 4}, {3, 0},
                      {2, 5}, {1, 5}, {3, 5}, {4, 5}},
                     roles_with_latents(8, {6, 7}));
}

// Initial skeleton of six_var_dag (11 edges, all o-o).
inline MixedGraph six_var_initial_skeleton() {
    MixedGraph g(6);
    for (auto [a, b] : std::initializer_list<std::pair<Vertex, Vertex>>{{0, 1},
                                                                        {0, 3},
                                                                        {0, 4},
                                                                        {1, 2},
                                                                        {1, 4},
                                                                        {1, 5},
                                                                        {2, 3},
                                                                        {2, 5},
                                                                        {3, 4},
                                                                        {3, 5},
                                                                        {4, 5}})
        g.add_edge(a, b, EdgeMark::Circle, EdgeMark::Circle);
    return g;
}

inline MixedGraph six_var_pag() {
    return make_pag(6, {{2, 1, EdgeMark::Circle, EdgeMark::Arrow},
                        {2, 3, EdgeMark::Circle, EdgeMark::Arrow},
                        {1, 0, EdgeMark::Arrow, EdgeMark::Arrow},
                        {1, 4, EdgeMark::Tail, EdgeMark::Arrow},
                        {3, 0, EdgeMark::Tail, EdgeMark::Arrow},
                        {3, 4, EdgeMark::Arrow, EdgeMark::Arrow},
                        {2, 5, EdgeMark::Tail, EdgeMark::Arrow},
                        {1, 5, EdgeMark::Tail, EdgeMark::Arrow},
                        {3, 5, EdgeMark::Circle, EdgeMark::Arrow},
                        {4, 5, EdgeMark::Circle, EdgeMark::Arrow}});
}

// Five observed variables where RFCI keeps one extra edge (X1 <-> X5).
// Indices: X1..X5 = 0..4, L1 = 5, L2 = 6.
inline LatentDag five_var_dag() {
    return LatentDag(7, {{2, 1}, {2, 3}, {5, 1}, {5, 0}, {6, 3}, {6, 4}, {1, 4}, {3, 0}},
                     roles_with_latents(7, {5, 6}));
}

inline MixedGraph five_var_fci_pag() {
    return make_pag(5, {{2, 1, EdgeMark::Circle, EdgeMark::Arrow},
                        {2, 3, EdgeMark::Circle, EdgeMark::Arrow},
                        {1, 0, EdgeMark::Arrow, EdgeMark::Arrow},
                        {1, 4, EdgeMark::Tail, EdgeMark::Arrow},
                        {3, 0, EdgeMark::Tail, EdgeMark::Arrow},
                        {4, 3, EdgeMark::Arrow, EdgeMark::Arrow}});
}

inline MixedGraph five_var_rfci_pag() {
    MixedGraph g = five_var_fci_pag();
    g.add_edge(4, 0, EdgeMark::Arrow, EdgeMark::Arrow);
    return g;
}

// five_var_dag plus one extra latent confounding X1 and X5; both algorithms
// output five_var_rfci_pag. L3 = 7.
inline LatentDag five_var_extra_latent_dag() {
    return LatentDag(8,
                     {{2, 1}, {2, 3}, {5, 1}, {5, 0}, {6, 3}, {6, 4}, {1, 4}, {3, 0},
                      {7, 0}, {7, 4}},
                     roles_with_latents(8, {5, 6, 7}));
}

// Minimal-sepset example: storing a non-minimal separating set would wrongly
// mark <Xi, Xj, Xk> a non-v-structure.
// Observed Xa..Xl = {a:0, b:1, c:2, d:3, e:4, f:5, g:6, i:7, j:8, k:9, l:10},
// latents L1..L4 = 11..14.
inline LatentDag minimal_sepset_dag() {
    return LatentDag(
        15,
        {{6, 10}, {2, 0},  {2, 1},  {2, 10}, {5, 7},  {5, 10}, {7, 6},  {0, 9},  {0, 10},
         {4, 5},  {4, 3},  {4, 10}, {3, 8},  {3, 10}, {8, 6},  {8, 10}, {9, 8},  {9, 10},
         {1, 7},  {1, 10}, {11, 7}, {11, 0}, {12, 7}, {12, 3}, {13, 9}, {13, 1}, {14, 5},
         {14, 8}},
        roles_with_latents(15, {11, 12, 13, 14}));
}

constexpr Vertex kMinimalSepsetXi = 7, kMinimalSepsetXj = 8, kMinimalSepsetXk = 9;

// All-subsets discriminating-path example: checking only the full sepset
// would wrongly orient Xb -> Xp instead of deleting Xj - Xb.
// Observed {a:0, b:1, c:2, d:3, e:4, f:5, g:6, i:7, j:8, k:9, l:10, p:11};
// each dashed pair in the source graph is a latent common cause (12..21).
inline LatentDag discriminating_subsets_dag() {
    return LatentDag(
        22,
        {{1, 10},  {1, 3},   {12, 1},  {12, 0},  {14, 1},  {14, 11}, {6, 1},  {0, 10},
         {0, 8},   {5, 0},   {13, 0},  {13, 11}, {18, 5},  {18, 10}, {5, 11}, {5, 6},
         {6, 10},  {6, 11},  {19, 6},  {19, 8},  {8, 10},  {8, 11},  {8, 2},  {20, 8},
         {20, 9},  {21, 9},  {21, 10}, {9, 11},  {7, 8},   {16, 10}, {16, 2}, {2, 11},
         {17, 11}, {17, 4},  {3, 4},   {4, 10},  {3, 10},  {15, 2},  {15, 3}},
        roles_with_latents(22, {12, 13, 14, 15, 16, 17, 18, 19, 20, 21}));
}

constexpr Vertex kDiscrXb = 1, kDiscrXj = 8, kDiscrXp = 11;

}  // namespace latentpag::fixtures
