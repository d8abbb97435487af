#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "latentpag/fci.hpp"
#include "latentpag/latent_dag.hpp"
#include "latentpag/report.hpp"
#include "latentpag/rfci.hpp"

namespace latentpag::sim {

struct SimConfig {
    int p_prime = 15;
    double expected_neighbors = 2.0;
    int n = 1000;
    double alpha = 0.01;
    std::uint64_t seed = 1;
    int replicates = 50;
};

struct WeightedDag {
    Eigen::MatrixXd weights;  // strictly lower triangular; W(i,j) != 0 means X_j -> X_i
    LatentDag dag;
};

/// Random DAG on p' vertices: lower-triangle entries are
/// Bernoulli(E(N)/(p'-1)), realized edges get Uniform([0.1, 1]) weights.
WeightedDag random_weighted_dag(int p_prime, double expected_neighbors, std::uint64_t seed);

/// Tags floor(k/2) of the k vertices with no parents and at least two
/// children as latent, chosen uniformly; no selection variables.
LatentDag mark_latents(const LatentDag& dag, std::uint64_t seed);

/// Sigma' = (I - A)^-1 (I - A)^-T for a strictly lower-triangular A.
Eigen::MatrixXd covariance_from_weights(const Eigen::MatrixXd& weights);

/// Rows/columns of the latent vertices deleted.
Eigen::MatrixXd observed_submatrix(const Eigen::MatrixXd& cov, const LatentDag& dag);

/// n i.i.d. rows of N(0, sigma) via Cholesky and inverse-CDF normals;
/// bit-identical across platforms for a fixed seed.
Eigen::MatrixXd sample_gaussian(const Eigen::MatrixXd& sigma, int n, std::uint64_t seed);

/// Replicate inputs derived deterministically from (config, replicate index).
WeightedDag make_replicate_dag(const SimConfig& cfg, int replicate);
std::uint64_t data_seed(const SimConfig& cfg, int replicate);

struct PagDiff {
    int missing_or_extra = 0;
    /// Ordered pairs where both graphs carry the edge but marks differ, plus
    /// two per edge present in exactly one graph.
    int mark_differences = 0;
};

PagDiff compare_pags(const MixedGraph& a, const MixedGraph& b);

/// Unshielded triples whose middle vertex carries arrowheads from both sides.
int count_v_structures(const MixedGraph& g);

enum class Scenario { S1, S2, S3 };

/// Inducing-path trichotomy of a pair (DAG vertex indices; the sets are
/// Adj(i,j), Adj(j,i), Pds(i,j), Pds(j,i) mapped into DAG indices).
Scenario scenario_classify(const LatentDag& d, Vertex i, Vertex j, const VertexSet& adj_i,
                           const VertexSet& adj_j, const VertexSet& pds_i, const VertexSet& pds_j);

/// Same, from an oracle FCI run's recorded intermediates; i and j are
/// observed positions.
Scenario classify_observed_pair(const DsepOracle& oracle, const FciTrace& trace, Vertex i,
                                Vertex j);

/// Arithmetic mean of the per-run maxima; throws on empty input.
double mean_max_pds(const std::vector<RunReport>& reports);

/// Per-vertex max Possible-D-SEP size after Steps 1-2 only (the full run is
/// not needed to measure the complexity driver).
std::vector<int> measure_max_pds(const CiSource& ci, const FciConfig& cfg);

/// Algorithm selector used by the CLI and the benchmark harness.
struct AlgorithmSpec {
    std::string name;
    bool rfci = false;
    FciConfig fci;
};

/// Parses fci, fcipath, cfci[path], scfci[path], aafci[path], caafci[path],
/// scaafci[path], rfci; nullopt for anything else.
std::optional<AlgorithmSpec> parse_algorithm(const std::string& name);

RunReport run_algorithm(const AlgorithmSpec& spec, const CiSource& ci, FciTrace* trace = nullptr,
                        std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace latentpag::sim
