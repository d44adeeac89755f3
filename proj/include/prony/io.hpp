#ifndef PRONY_IO_HPP
#define PRONY_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "prony/inversion.hpp"
#include "prony/leaves.hpp"
#include "prony/linalg.hpp"
#include "prony/polynomial.hpp"
#include "prony/signal.hpp"

namespace prony::io {

// Shortest decimal form that parses back to the same 64-bit float.
std::string format_double(double v);
double parse_double(const std::string& s);

nlohmann::json to_json(const Signal& s);
nlohmann::json to_json(const MomentVector& mu);
nlohmann::json to_json(const MonicRealPolynomial& q);
nlohmann::json to_json(const AffineSolutionSet& set);
nlohmann::json to_json(const InversionResult& r);
nlohmann::json to_json(const TwoNodeCurveClass& c);
nlohmann::json to_json(const SlopeFit& fit);

Signal signal_from_json(const nlohmann::json& j);
MomentVector moments_from_json(const nlohmann::json& j);
MonicRealPolynomial polynomial_from_json(const nlohmann::json& j);
AffineSolutionSet affine_set_from_json(const nlohmann::json& j);
InversionResult inversion_from_json(const nlohmann::json& j);

// CSV table: a header row of column names plus numeric rows.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

// Columns t_1..t_k, x_1..x_d, a_1..a_d, residual, near_boundary; rows in the
// cloud's (deterministic) order.
CsvTable leaf_cloud_table(const LeafPointCloud& cloud, int d, int param_count);

// Columns h, eps, rho, rho_A, rho_X, rho_S0..rho_S{2d-1}, samples, failures.
CsvTable sweep_table(const std::vector<ErrorSweepRecord>& records, int d);

// Columns x_1..x_d, a_1..a_d.
CsvTable signal_table(const std::vector<Signal>& signals, int d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace prony::io

#endif
