#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "latentpag/latent_dag.hpp"
#include "latentpag/mixed_graph.hpp"

namespace latentpag::io {

/// PAG matrix file: CSV with a header row of vertex names and a p x p
/// integer matrix, entry [i][j] = mark at j on the edge i-j
/// (0 absent, 1 circle, 2 arrow, 3 tail).
struct NamedPag {
    std::vector<std::string> names;
    MixedGraph graph;
};

void write_pag_csv(const std::filesystem::path& path, const MixedGraph& g,
                   const std::vector<std::string>& names);
NamedPag read_pag_csv(const std::filesystem::path& path);

/// DAG file: line-oriented text with `p <count>`, optional
/// `role <index> <observed|latent|selection>` lines (observed by default)
/// and `edge <src> <dst> [weight]` lines. Validated acyclic on load.
struct DagFileContents {
    LatentDag dag;
    std::optional<Eigen::MatrixXd> weights;
};

DagFileContents read_dag_file(const std::filesystem::path& path);
void write_dag_file(const std::filesystem::path& path, const LatentDag& dag,
                    const Eigen::MatrixXd* weights = nullptr);

/// Numeric CSV with a header row of column names (raw data or covariance).
struct NamedMatrix {
    std::vector<std::string> names;
    Eigen::MatrixXd values;
};

NamedMatrix read_csv_matrix(const std::filesystem::path& path);
void write_csv_matrix(const std::filesystem::path& path, const std::vector<std::string>& names,
                      const Eigen::MatrixXd& values);

/// Shortest round-trip decimal form (locale-independent).
std::string format_double(double v);

std::vector<std::string> default_names(int p);

}  // namespace latentpag::io
