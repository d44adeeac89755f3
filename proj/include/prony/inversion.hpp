#ifndef PRONY_INVERSION_HPP
#define PRONY_INVERSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prony/exec.hpp"
#include "prony/leaves.hpp"
#include "prony/linalg.hpp"
#include "prony/polynomial.hpp"
#include "prony/signal.hpp"

namespace prony {

enum class SolveStatus { Unique, Empty, NonHyperbolic, Degenerate };

std::string to_string(SolveStatus status);

struct InversionResult {
    SolveStatus status = SolveStatus::Empty;
    std::optional<Signal> signal; // present iff Unique
    double residual = 0.0;        // max |m_k(signal) - mu_k| over k = 0..2d-1
    double min_node_gap = 0.0;
    std::vector<double> sigma;
};

struct SolveOptions {
    double rank_tol = 1e-10;
    double gap_tol = kDefaultGapTol;
};

// Classical inversion of the full moment system: the d x d Hankel block
// gives the node polynomial, its roots give the nodes, and the leading
// Vandermonde block gives the amplitudes. mu must hold 2d values.
InversionResult prony_solve(const MomentVector& mu, int d, const SolveOptions& opts = {});

struct ErrorSetSample {
    std::vector<Signal> accepted;
    std::vector<MomentVector> accepted_mu; // the perturbed moment vectors
    std::size_t attempts = 0;
    std::size_t failures = 0; // draws where the solver did not return Unique
    double acceptance_ratio = 0.0;
};

// Draws moment vectors uniformly from the eps-cube around moments(f, 2d),
// inverts each, and keeps the unique solutions (each re-verified to lie in
// the error set). Draw i uses an RNG seeded from seed xor i, so samples are
// reproducible and independent of the execution schedule. Throws
// std::domain_error when the cube center itself does not invert.
ErrorSetSample sample_error_set(const Signal& f, double eps, std::size_t budget,
                                std::uint64_t seed, Exec exec = Exec::Parallel,
                                const SolveOptions& opts = {});

struct WorstCaseErrors {
    double rho = 0.0;   // max ||F' - F||
    double rho_A = 0.0; // max ||A' - A||
    double rho_X = 0.0; // max ||X' - X||
    std::size_t samples = 0;
    std::size_t failures = 0;
};

// Empirical lower bounds for the worst-case reconstruction errors over the
// error set: random cube samples plus all 2^{2d} cube corners.
WorstCaseErrors worst_case_errors(const Signal& f, double eps, std::size_t budget,
                                  std::uint64_t seed, Exec exec = Exec::Parallel,
                                  const SolveOptions& opts = {});

struct LeafErrorConfig {
    std::size_t cloud_size = 512; // points per leaf cloud
    double box = 3.0;             // sigma-space parameter box for q >= d
    double gap_tol = kDefaultGapTol;
};

struct LeafErrorResult {
    double rho_Sq = 0.0; // max Hausdorff distance between reference and perturbed leaf clouds
    double dist_to_leaf = 0.0;  // max distance of transported samples to the reference cloud
    double section_dev = 0.0;   // max |m_{q+1}(G') - m_{q+1}(G)| over transported samples
    double fill_radius = 0.0;   // discretization scale of the reference cloud
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::size_t empty_leaves = 0;
};

// Worst-case leaf reconstruction error: both clouds S_q(G) and S_q(G') are
// sampled over a shared parameter window intersected with the radius-ball
// around the model signal G, so the Hausdorff estimate tracks the leaf
// displacement instead of grid mismatch.
LeafErrorResult leaf_reconstruction_error(const Signal& f, int q, double eps, double radius,
                                          std::size_t budget, std::uint64_t seed,
                                          const LeafErrorConfig& cfg = {},
                                          Exec exec = Exec::Parallel);

// Symmetric Hausdorff distance between finite signal clouds (Euclidean
// parameter-space metric). Zero for identical clouds.
double hausdorff_distance(const std::vector<Signal>& a, const std::vector<Signal>& b,
                          Exec exec = Exec::Parallel);

enum class SweepMode { Full, Leaf };

struct SweepConfig {
    std::vector<double> h_values;
    double eps_c = 1e-8;
    double eps_exp = 0.0; // eps = eps_c * h^eps_exp
    SweepMode mode = SweepMode::Full;
    int q = -1; // leaf order for SweepMode::Leaf
    double kappa = 0.0;
    std::size_t budget = 1024;
    std::uint64_t seed = 0;
    double radius = 0.5; // ball radius around the model signal
    LeafErrorConfig leaf;
};

struct ErrorSweepRecord {
    double h = 0.0;
    double eps = 0.0;
    double rho = 0.0;
    double rho_A = 0.0;
    double rho_X = 0.0;
    std::vector<double> rho_Sq; // indexed by q; NaN where not computed
    std::size_t samples = 0;
    std::size_t failures = 0;
    double eps_lower = 0.0; // (1+|kappa|)^{-(2d-1)} eps, transport bound
    double eps_upper = 0.0; // (1+|kappa|)^{+(2d-1)} eps
    double dist_to_leaf = 0.0;
    double section_dev = 0.0;
    double fill_radius = 0.0; // leaf-cloud discretization scale (Leaf mode)
};

struct SlopeFit {
    double slope = 0.0;
    double stderr_ = 0.0;
    std::size_t n = 0;
};

// Least-squares fit of log(y) against log(h); entries with non-finite or
// non-positive y are ignored.
std::optional<SlopeFit> fit_loglog_slope(const std::vector<double>& h,
                                         const std::vector<double>& y);

struct SweepSummary {
    std::optional<SlopeFit> slope_rho;
    std::optional<SlopeFit> slope_rho_A;
    std::optional<SlopeFit> slope_rho_X;
    std::optional<SlopeFit> slope_rho_Sq;
    std::vector<std::string> warnings;
};

// For each h: scales the model signal to spread h (shift kappa), sets
// eps = C h^p, and measures either the full-solver worst-case errors or the
// leaf reconstruction error at order q. The model signal must be regular
// for the given parameters.
std::pair<std::vector<ErrorSweepRecord>, SweepSummary> scaling_sweep(
    const Signal& g_model, const SweepConfig& cfg, const RegularityParams& regularity,
    Exec exec = Exec::Parallel);

} // namespace prony

#endif
