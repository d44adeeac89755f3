#ifndef PRONY_LINALG_HPP
#define PRONY_LINALG_HPP

#include <optional>
#include <vector>

#include "prony/signal.hpp"

namespace prony {

// Solution set of a (possibly under- or over-determined) linear system in
// sigma-coefficient space: every solution is particular + sum t_i basis_i.
// An inconsistent system is represented with particular absent and an empty
// basis. The basis is orthonormal, each vector signed so that its first
// entry above noise level is positive.
struct AffineSolutionSet {
    int ambient_dim = 0;
    std::optional<std::vector<double>> particular;
    std::vector<std::vector<double>> basis;
    int rank = 0;

    bool empty() const { return !particular.has_value(); }
    // Dimension of the solution set; -1 for the empty set.
    int dimension() const { return empty() ? -1 : static_cast<int>(basis.size()); }
    std::vector<double> point(const std::vector<double>& t) const;
};

// Unique amplitudes A with sum_j a_j x_j^k = mu_k for k = 0..d-1, computed
// by the Björck-Pereyra progressive-elimination algorithm for dual
// Vandermonde systems. Throws std::domain_error when the minimal node gap
// falls below gap_tol.
std::vector<double> vandermonde_amplitudes(const std::vector<double>& nodes,
                                           const MomentVector& mu, double gap_tol = 1e-12);

// Amplitudes on a low-order leaf: solves the leading (q+1)x(q+1) Vandermonde
// block on x_1..x_{q+1} after moving the free amplitudes a_{q+2}..a_d to the
// right-hand side. Returns the full length-d amplitude vector.
std::vector<double> leaf_amplitudes_low_q(const MomentVector& mu, const std::vector<double>& nodes,
                                          const std::vector<double>& free_amplitudes,
                                          double gap_tol = 1e-12);

// Affine set of (sigma_1..sigma_d) solving the Hankel rows
// sum_{i=0}^d mu_{l-i} sigma_i = 0 (sigma_0 = 1) for l = d..q. Rank is
// decided by singular values against rank_tol times the largest one.
AffineSolutionSet hankel_solution_set(const MomentVector& mu, int d, double rank_tol = 1e-10);

// Max row residual |sum_i mu_{l-i} sigma_i| over l = d..q.
double hankel_row_residual(const MomentVector& mu, int d, const std::vector<double>& sigma);

} // namespace prony

#endif
