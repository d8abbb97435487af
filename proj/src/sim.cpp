#include "latentpag/sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "latentpag/errors.hpp"
#include "latentpag/rng.hpp"

namespace latentpag::sim {

WeightedDag random_weighted_dag(int p_prime, double expected_neighbors, std::uint64_t seed) {
    if (p_prime < 1) throw std::invalid_argument("p_prime must be positive");
    double prob = p_prime > 1 ? expected_neighbors / (p_prime - 1) : 0.0;
    if (prob < 0.0 || prob > 1.0)
        throw std::invalid_argument("need 0 <= E(N)/(p'-1) <= 1");
    StableRng rng(seed);
    Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(p_prime, p_prime);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i < p_prime; ++i)
        for (int j = 0; j < i; ++j)
            if (rng.bernoulli(prob)) {
                weights(i, j) = rng.uniform(0.1, 1.0);
                edges.emplace_back(j, i);  // X_j -> X_i
            }
    LatentDag dag(p_prime, edges, std::vector<VertexRole>(static_cast<std::size_t>(p_prime),
                                                          VertexRole::Observed));
    return {std::move(weights), std::move(dag)};
}

LatentDag mark_latents(const LatentDag& dag, std::uint64_t seed) {
    std::vector<Vertex> eligible;
    for (Vertex v = 0; v < dag.vertex_count(); ++v)
        if (dag.parents(v).empty() && dag.children(v).size() >= 2) eligible.push_back(v);
    StableRng rng(seed);
    std::vector<Vertex> chosen =
        rng.sample_without_replacement(eligible, eligible.size() / 2);
    std::vector<VertexRole> roles = dag.roles();
    for (Vertex v : chosen) roles[static_cast<std::size_t>(v)] = VertexRole::Latent;
    return LatentDag(dag.vertex_count(), dag.directed_edges(), std::move(roles));
}

Eigen::MatrixXd covariance_from_weights(const Eigen::MatrixXd& weights) {
    const auto p = weights.rows();
    if (weights.cols() != p) throw std::invalid_argument("weight matrix must be square");
    for (Eigen::Index i = 0; i < p; ++i)
        for (Eigen::Index j = i; j < p; ++j)
            if (weights(i, j) != 0.0)
                throw std::invalid_argument("weight matrix must be strictly lower triangular");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(p, p) - weights;
    Eigen::MatrixXd b = m.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(p, p));
    Eigen::MatrixXd sigma = b * b.transpose();
    return ((sigma + sigma.transpose()) / 2.0).eval();
}

Eigen::MatrixXd observed_submatrix(const Eigen::MatrixXd& cov, const LatentDag& dag) {
    const VertexSet& obs = dag.observed();
    Eigen::MatrixXd out(obs.size(), obs.size());
    for (int a = 0; a < obs.size(); ++a)
        for (int b = 0; b < obs.size(); ++b) out(a, b) = cov(obs[a], obs[b]);
    return out;
}

Eigen::MatrixXd sample_gaussian(const Eigen::MatrixXd& sigma, int n, std::uint64_t seed) {
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    if (llt.info() != Eigen::Success)
        throw DataError("sample_gaussian: covariance is not positive definite");
    Eigen::MatrixXd chol = llt.matrixL();
    StableRng rng(seed);
    const auto p = sigma.rows();
    Eigen::MatrixXd z(n, p);
    for (int r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < p; ++c) z(r, c) = rng.normal();
    return z * chol.transpose();
}

WeightedDag make_replicate_dag(const SimConfig& cfg, int replicate) {
    std::uint64_t base = derive_seed(cfg.seed, static_cast<std::uint64_t>(replicate) * 3);
    std::uint64_t latent_seed =
        derive_seed(cfg.seed, static_cast<std::uint64_t>(replicate) * 3 + 1);
    WeightedDag wd = random_weighted_dag(cfg.p_prime, cfg.expected_neighbors, base);
    wd.dag = mark_latents(wd.dag, latent_seed);
    return wd;
}

std::uint64_t data_seed(const SimConfig& cfg, int replicate) {
    return derive_seed(cfg.seed, static_cast<std::uint64_t>(replicate) * 3 + 2);
}

PagDiff compare_pags(const MixedGraph& a, const MixedGraph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("compare_pags: vertex counts differ");
    PagDiff diff;
    const int p = a.vertex_count();
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = i + 1; j < p; ++j) {
            bool ea = a.has_edge(i, j), eb = b.has_edge(i, j);
            if (ea != eb) {
                diff.missing_or_extra += 1;
                diff.mark_differences += 2;
            } else if (ea && eb) {
                if (a.mark(i, j) != b.mark(i, j)) diff.mark_differences += 1;
                if (a.mark(j, i) != b.mark(j, i)) diff.mark_differences += 1;
            }
        }
    return diff;
}

int count_v_structures(const MixedGraph& g) {
    int count = 0;
    for (const Triple& t : unshielded_triples(g))
        if (g.mark_is(t.i, t.j, EdgeMark::Arrow) && g.mark_is(t.k, t.j, EdgeMark::Arrow)) ++count;
    return count;
}

Scenario scenario_classify(const LatentDag& d, Vertex i, Vertex j, const VertexSet& adj_i,
                           const VertexSet& adj_j, const VertexSet& pds_i,
                           const VertexSet& pds_j) {
    if (!inducing_path_exists(d, i, j, adj_i) || !inducing_path_exists(d, i, j, adj_j))
        return Scenario::S3;
    if (inducing_path_exists(d, i, j, pds_i) && inducing_path_exists(d, i, j, pds_j))
        return Scenario::S1;
    return Scenario::S2;
}

Scenario classify_observed_pair(const DsepOracle& oracle, const FciTrace& trace, Vertex i,
                                Vertex j) {
    const VertexSet& obs = oracle.dag().observed();
    auto map_set = [&obs](VertexSet s) {
        std::vector<Vertex> out;
        for (Vertex v : s) out.push_back(obs[v]);
        return VertexSet(std::move(out));
    };
    VertexSet adj_i = map_set(trace.adj_c1[static_cast<std::size_t>(i)].without(j));
    VertexSet adj_j = map_set(trace.adj_c1[static_cast<std::size_t>(j)].without(i));
    VertexSet pds_i = map_set(trace.pds_c2[static_cast<std::size_t>(i)].without(i).without(j));
    VertexSet pds_j = map_set(trace.pds_c2[static_cast<std::size_t>(j)].without(i).without(j));
    return scenario_classify(oracle.dag(), obs[i], obs[j], adj_i, adj_j, pds_i, pds_j);
}

double mean_max_pds(const std::vector<RunReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("mean_max_pds: no reports");
    double sum = 0.0;
    for (const RunReport& r : reports) sum += r.max_pds;
    return sum / static_cast<double>(reports.size());
}

std::vector<int> measure_max_pds(const CiSource& ci, const FciConfig& cfg) {
    Step2Result s2 = run_through_step2(ci, cfg);
    return pds_pool_sizes(s2.c2, cfg.pds_mode);
}

std::optional<AlgorithmSpec> parse_algorithm(const std::string& name) {
    AlgorithmSpec spec;
    spec.name = name;
    if (name == "rfci") {
        spec.rfci = true;
        return spec;
    }
    std::string rest = name;
    auto strip_suffix = [&rest](const std::string& suffix) {
        if (rest.size() >= suffix.size() &&
            rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0) {
            rest.resize(rest.size() - suffix.size());
            return true;
        }
        return false;
    };
    if (strip_suffix("fcipath"))
        spec.fci.pds_mode = PdsMode::Path;
    else if (strip_suffix("fci"))
        spec.fci.pds_mode = PdsMode::Full;
    else
        return std::nullopt;
    if (rest.size() >= 2 && rest.compare(rest.size() - 2, 2, "aa") == 0) {
        spec.fci.cutoff = Cutoff::adaptive();
        rest.resize(rest.size() - 2);
    }
    if (rest == "sc")
        spec.fci.conservative = ConservativeMode::Step2And4;
    else if (rest == "c")
        spec.fci.conservative = ConservativeMode::Step2;
    else if (!rest.empty())
        return std::nullopt;
    return spec;
}

RunReport run_algorithm(const AlgorithmSpec& spec, const CiSource& ci, FciTrace* trace,
                        std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (spec.rfci) return run_rfci(ci, nullptr, spec.fci.threads, deadline);
    return run_fci(ci, spec.fci, trace, deadline);
}

}  // namespace latentpag::sim
