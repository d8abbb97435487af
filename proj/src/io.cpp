#include "latentpag/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "latentpag/errors.hpp"

namespace latentpag::io {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        std::size_t b = field.find_first_not_of(" \t\r");
        std::size_t e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_double(const std::string& s, const std::string& context) {
    double v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw DataError("bad number '" + s + "' in " + context);
    return v;
}

long parse_int(const std::string& s, const std::string& context) {
    long v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw DataError("bad integer '" + s + "' in " + context);
    return v;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::vector<std::string> default_names(int p) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

void write_pag_csv(const std::filesystem::path& path, const MixedGraph& g,
                   const std::vector<std::string>& names) {
    const int p = g.vertex_count();
    if (static_cast<int>(names.size()) != p) throw DataError("name count mismatch");
    std::ofstream out = open_for_write(path);
    for (int i = 0; i < p; ++i) out << (i ? "," : "") << names[static_cast<std::size_t>(i)];
    out << "\n";
    for (Vertex i = 0; i < p; ++i) {
        for (Vertex j = 0; j < p; ++j) {
            int m = 0;
            if (auto mk = g.mark(i, j)) m = static_cast<int>(*mk);
            out << (j ? "," : "") << m;
        }
        out << "\n";
    }
}

NamedPag read_pag_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty PAG file " + path.string());
    std::vector<std::string> names = split_csv_line(line);
    const int p = static_cast<int>(names.size());
    if (p == 0) throw DataError("PAG file has no columns");
    MixedGraph g(p);
    std::vector<std::vector<int>> m(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r) {
        if (!std::getline(in, line)) throw DataError("PAG file truncated at row " + std::to_string(r));
        auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != p)
            throw DataError("PAG row " + std::to_string(r) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(p));
        for (int c = 0; c < p; ++c) {
            long v = parse_int(fields[static_cast<std::size_t>(c)], "PAG matrix");
            if (v < 0 || v > 3) throw DataError("PAG mark out of range: " + std::to_string(v));
            m[static_cast<std::size_t>(r)].push_back(static_cast<int>(v));
        }
    }
    for (int i = 0; i < p; ++i) {
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
            throw DataError("PAG diagonal must be zero");
        for (int j = i + 1; j < p; ++j) {
            int a = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            int b = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if ((a == 0) != (b == 0))
                throw DataError("PAG edge presence must be symmetric for (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
            if (a != 0)
                g.add_edge(i, j, static_cast<EdgeMark>(b), static_cast<EdgeMark>(a));
        }
    }
    return {std::move(names), std::move(g)};
}

DagFileContents read_dag_file(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    int p = -1;
    std::vector<VertexRole> roles;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::tuple<Vertex, Vertex, double>> weighted;
    bool any_weight = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::stringstream ss(line);
        std::string word;
        if (!(ss >> word) || word[0] == '#') continue;
        std::string ctx = path.string() + ":" + std::to_string(lineno);
        if (word == "p") {
            long count;
            std::string field;
            if (!(ss >> field)) throw DataError("missing vertex count in " + ctx);
            count = parse_int(field, ctx);
            if (count < 1) throw DataError("vertex count must be positive in " + ctx);
            p = static_cast<int>(count);
            roles.assign(static_cast<std::size_t>(p), VertexRole::Observed);
        } else if (word == "role") {
            if (p < 0) throw DataError("role before p in " + ctx);
            std::string idx_s, role_s;
            if (!(ss >> idx_s >> role_s)) throw DataError("malformed role line in " + ctx);
            long idx = parse_int(idx_s, ctx);
            if (idx < 0 || idx >= p) throw DataError("role index out of range in " + ctx);
            VertexRole role;
            if (role_s == "observed")
                role = VertexRole::Observed;
            else if (role_s == "latent")
                role = VertexRole::Latent;
            else if (role_s == "selection")
                role = VertexRole::Selection;
            else
                throw DataError("unknown role '" + role_s + "' in " + ctx);
            roles[static_cast<std::size_t>(idx)] = role;
        } else if (word == "edge") {
            if (p < 0) throw DataError("edge before p in " + ctx);
            std::string src_s, dst_s, w_s;
            if (!(ss >> src_s >> dst_s)) throw DataError("malformed edge line in " + ctx);
            long src = parse_int(src_s, ctx), dst = parse_int(dst_s, ctx);
            if (src < 0 || src >= p || dst < 0 || dst >= p)
                throw DataError("edge index out of range in " + ctx);
            double w = 0.0;
            if (ss >> w_s) {
                w = parse_double(w_s, ctx);
                any_weight = true;
            }
            edges.emplace_back(static_cast<Vertex>(src), static_cast<Vertex>(dst));
            weighted.emplace_back(static_cast<Vertex>(src), static_cast<Vertex>(dst), w);
        } else {
            throw DataError("unknown directive '" + word + "' in " + ctx);
        }
    }
    if (p < 0) throw DataError("DAG file " + path.string() + " missing 'p' header");
    LatentDag dag(p, edges, std::move(roles));
    std::optional<Eigen::MatrixXd> weights;
    if (any_weight) {
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(p, p);
        for (auto [src, dst, val] : weighted) w(dst, src) = val;
        weights = std::move(w);
    }
    return {std::move(dag), std::move(weights)};
}

void write_dag_file(const std::filesystem::path& path, const LatentDag& dag,
                    const Eigen::MatrixXd* weights) {
    std::ofstream out = open_for_write(path);
    out << "p " << dag.vertex_count() << "\n";
    for (Vertex v = 0; v < dag.vertex_count(); ++v) {
        if (dag.role(v) == VertexRole::Latent) out << "role " << v << " latent\n";
        if (dag.role(v) == VertexRole::Selection) out << "role " << v << " selection\n";
    }
    for (auto [src, dst] : dag.directed_edges()) {
        out << "edge " << src << " " << dst;
        if (weights && (*weights)(dst, src) != 0.0) out << " " << format_double((*weights)(dst, src));
        out << "\n";
    }
}

NamedMatrix read_csv_matrix(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty CSV " + path.string());
    std::vector<std::string> names = split_csv_line(line);
    const int cols = static_cast<int>(names.size());
    if (cols == 0) throw DataError("CSV has no columns");
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != cols)
            throw DataError("CSV row " + std::to_string(lineno) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(cols));
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(cols));
        for (const std::string& f : fields)
            row.push_back(parse_double(f, path.string() + ":" + std::to_string(lineno)));
        rows.push_back(std::move(row));
    }
    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c)
            values(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
    return {std::move(names), std::move(values)};
}

void write_csv_matrix(const std::filesystem::path& path, const std::vector<std::string>& names,
                      const Eigen::MatrixXd& values) {
    if (static_cast<Eigen::Index>(names.size()) != values.cols())
        throw DataError("name count mismatch");
    std::ofstream out = open_for_write(path);
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << "\n";
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
        for (Eigen::Index c = 0; c < values.cols(); ++c)
            out << (c ? "," : "") << format_double(values(r, c));
        out << "\n";
    }
}

}  // namespace latentpag::io
