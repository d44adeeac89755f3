#include "prony/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prony::io {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("csv: cannot parse number '" + s + "'");
    return v;
}

namespace {

std::vector<double> doubles_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_array())
        throw std::invalid_argument("json: missing or non-array field '" + field + "'");
    std::vector<double> out;
    for (const auto& v : j[field]) {
        if (!v.is_number()) throw std::invalid_argument("json: non-numeric entry in '" + field + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

nlohmann::json array_json(const std::vector<double>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : v) a.push_back(x);
    return a;
}

} // namespace

nlohmann::json to_json(const Signal& s) {
    return {{"amplitudes", array_json(s.amplitudes)}, {"nodes", array_json(s.nodes)}};
}

nlohmann::json to_json(const MomentVector& mu) { return {{"values", array_json(mu.values)}}; }

nlohmann::json to_json(const MonicRealPolynomial& q) { return {{"sigma", array_json(q.sigma)}}; }

nlohmann::json to_json(const AffineSolutionSet& set) {
    nlohmann::json j;
    j["dim"] = set.dimension();
    if (set.particular.has_value())
        j["particular"] = array_json(*set.particular);
    else
        j["particular"] = nullptr;
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : set.basis) basis.push_back(array_json(v));
    j["basis"] = basis;
    return j;
}

nlohmann::json to_json(const InversionResult& r) {
    nlohmann::json j;
    j["status"] = to_string(r.status);
    if (r.signal.has_value())
        j["signal"] = to_json(*r.signal);
    else
        j["signal"] = nullptr;
    j["diagnostics"] = {{"residual", r.residual},
                        {"min_node_gap", r.min_node_gap},
                        {"sigma", array_json(r.sigma)}};
    return j;
}

nlohmann::json to_json(const TwoNodeCurveClass& c) {
    return {{"kind", to_string(c.kind)}, {"params", array_json(c.params)}};
}

nlohmann::json to_json(const SlopeFit& fit) {
    return {{"slope", fit.slope}, {"stderr", fit.stderr_}, {"points", fit.n}};
}

Signal signal_from_json(const nlohmann::json& j) {
    Signal s;
    s.amplitudes = doubles_from_json(j, "amplitudes");
    s.nodes = doubles_from_json(j, "nodes");
    validate(s);
    return s;
}

MomentVector moments_from_json(const nlohmann::json& j) {
    MomentVector mu;
    mu.values = doubles_from_json(j, "values");
    validate(mu);
    return mu;
}

MonicRealPolynomial polynomial_from_json(const nlohmann::json& j) {
    MonicRealPolynomial q;
    q.sigma = doubles_from_json(j, "sigma");
    return q;
}

AffineSolutionSet affine_set_from_json(const nlohmann::json& j) {
    AffineSolutionSet set;
    if (j.contains("particular") && !j["particular"].is_null())
        set.particular = doubles_from_json(j, "particular");
    if (j.contains("basis")) {
        for (const auto& row : j["basis"]) {
            std::vector<double> v;
            for (const auto& x : row) v.push_back(x.get<double>());
            set.basis.push_back(std::move(v));
        }
    }
    if (set.particular.has_value()) {
        set.ambient_dim = static_cast<int>(set.particular->size());
        set.rank = set.ambient_dim - static_cast<int>(set.basis.size());
    }
    return set;
}

InversionResult inversion_from_json(const nlohmann::json& j) {
    InversionResult r;
    const std::string status = j.at("status").get<std::string>();
    if (status == "UNIQUE")
        r.status = SolveStatus::Unique;
    else if (status == "EMPTY")
        r.status = SolveStatus::Empty;
    else if (status == "NON_HYPERBOLIC")
        r.status = SolveStatus::NonHyperbolic;
    else if (status == "DEGENERATE")
        r.status = SolveStatus::Degenerate;
    else
        throw std::invalid_argument("json: unknown status '" + status + "'");
    if (j.contains("signal") && !j["signal"].is_null()) r.signal = signal_from_json(j["signal"]);
    if (j.contains("diagnostics")) {
        const auto& diag = j["diagnostics"];
        r.residual = diag.value("residual", 0.0);
        r.min_node_gap = diag.value("min_node_gap", 0.0);
        if (diag.contains("sigma")) r.sigma = doubles_from_json(diag, "sigma");
    }
    return r;
}

std::string to_csv(const CsvTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (first) {
            table.columns = cells;
            first = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const std::string& c : cells) row.push_back(parse_double(c));
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable leaf_cloud_table(const LeafPointCloud& cloud, int d, int param_count) {
    CsvTable table;
    for (int i = 1; i <= param_count; ++i) table.columns.push_back("t_" + std::to_string(i));
    for (int i = 1; i <= d; ++i) table.columns.push_back("x_" + std::to_string(i));
    for (int i = 1; i <= d; ++i) table.columns.push_back("a_" + std::to_string(i));
    table.columns.push_back("residual");
    table.columns.push_back("near_boundary");
    for (const LeafPoint& pt : cloud.points) {
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(param_count + 2 * d + 2));
        for (double t : pt.params) row.push_back(t);
        for (double x : pt.signal.nodes) row.push_back(x);
        for (double a : pt.signal.amplitudes) row.push_back(a);
        row.push_back(pt.residual);
        row.push_back(pt.near_boundary ? 1.0 : 0.0);
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable sweep_table(const std::vector<ErrorSweepRecord>& records, int d) {
    CsvTable table;
    table.columns = {"h", "eps", "rho", "rho_A", "rho_X"};
    for (int q = 0; q <= 2 * d - 1; ++q) table.columns.push_back("rho_S" + std::to_string(q));
    table.columns.push_back("samples");
    table.columns.push_back("failures");
    for (const ErrorSweepRecord& rec : records) {
        std::vector<double> row{rec.h, rec.eps, rec.rho, rec.rho_A, rec.rho_X};
        for (int q = 0; q <= 2 * d - 1; ++q)
            row.push_back(q < static_cast<int>(rec.rho_Sq.size())
                              ? rec.rho_Sq[static_cast<std::size_t>(q)]
                              : std::numeric_limits<double>::quiet_NaN());
        row.push_back(static_cast<double>(rec.samples));
        row.push_back(static_cast<double>(rec.failures));
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable signal_table(const std::vector<Signal>& signals, int d) {
    CsvTable table;
    for (int i = 1; i <= d; ++i) table.columns.push_back("x_" + std::to_string(i));
    for (int i = 1; i <= d; ++i) table.columns.push_back("a_" + std::to_string(i));
    for (const Signal& s : signals) {
        std::vector<double> row;
        for (double x : s.nodes) row.push_back(x);
        for (double a : s.amplitudes) row.push_back(a);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace prony::io
