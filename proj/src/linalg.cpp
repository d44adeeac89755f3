#include "prony/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace prony {

std::vector<double> AffineSolutionSet::point(const std::vector<double>& t) const {
    if (empty()) throw std::domain_error("affine set: empty set has no points");
    if (t.size() != basis.size())
        throw std::invalid_argument("affine set: parameter count must match dimension");
    std::vector<double> p = *particular;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) p[j] += t[i] * basis[i][j];
    return p;
}

namespace {

void check_nodes(const std::vector<double>& nodes, double gap_tol) {
    if (nodes.empty()) throw std::invalid_argument("vandermonde: empty node list");
    for (std::size_t j = 1; j < nodes.size(); ++j) {
        if (!(nodes[j - 1] < nodes[j]))
            throw std::invalid_argument("vandermonde: nodes must be strictly increasing");
        if (nodes[j] - nodes[j - 1] < gap_tol)
            throw std::domain_error("vandermonde: near-coincident nodes, system near-singular");
    }
}

// Björck-Pereyra progressive elimination for the moment-matching system
// sum_j z_j x_j^k = b_k, k = 0..n. Two sweeps of bidiagonal updates; O(n^2)
// and backward stable for monotone nodes, unlike Cramer expansion.
std::vector<double> bjorck_pereyra_dual(const std::vector<double>& x, std::vector<double> b) {
    const int n = static_cast<int>(x.size()) - 1;
    for (int k = 0; k <= n - 1; ++k)
        for (int i = n - 1; i >= k; --i)
            b[static_cast<std::size_t>(i + 1)] -= x[static_cast<std::size_t>(k)] *
                                                  b[static_cast<std::size_t>(i)];
    for (int k = n - 1; k >= 0; --k)
        for (int i = k + 1; i <= n; ++i) {
            b[static_cast<std::size_t>(i)] /= x[static_cast<std::size_t>(i)] -
                                              x[static_cast<std::size_t>(i - k - 1)];
            b[static_cast<std::size_t>(i - 1)] -= b[static_cast<std::size_t>(i)];
        }
    return b;
}

} // namespace

std::vector<double> vandermonde_amplitudes(const std::vector<double>& nodes,
                                           const MomentVector& mu, double gap_tol) {
    check_nodes(nodes, gap_tol);
    if (mu.size() != nodes.size())
        throw std::invalid_argument("vandermonde: need exactly d moments for d nodes");
    return bjorck_pereyra_dual(nodes, mu.values);
}

std::vector<double> leaf_amplitudes_low_q(const MomentVector& mu, const std::vector<double>& nodes,
                                          const std::vector<double>& free_amplitudes,
                                          double gap_tol) {
    const std::size_t d = nodes.size();
    if (d == 0) throw std::invalid_argument("leaf_amplitudes_low_q: empty node list");
    const std::size_t q = mu.size() - 1;
    if (q > d - 1) throw std::invalid_argument("leaf_amplitudes_low_q: requires q <= d-1");
    if (free_amplitudes.size() != d - q - 1)
        throw std::invalid_argument("leaf_amplitudes_low_q: need d-q-1 free amplitudes");
    for (std::size_t j = 1; j < d; ++j)
        if (!(nodes[j - 1] < nodes[j]))
            throw std::invalid_argument("leaf_amplitudes_low_q: nodes must be strictly increasing");

    // rhs_k = mu_k - sum_{s >= q+2} a_s x_s^k
    std::vector<double> rhs(mu.values);
    for (std::size_t s = q + 1; s < d; ++s) {
        double power = free_amplitudes[s - q - 1];
        for (std::size_t k = 0; k <= q; ++k) {
            rhs[k] -= power;
            power *= nodes[s];
        }
    }
    std::vector<double> head(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(q + 1));
    check_nodes(head, gap_tol);
    std::vector<double> solved = bjorck_pereyra_dual(head, rhs);
    solved.insert(solved.end(), free_amplitudes.begin(), free_amplitudes.end());
    return solved;
}

AffineSolutionSet hankel_solution_set(const MomentVector& mu, int d, double rank_tol) {
    if (d < 1) throw std::invalid_argument("hankel: d must be >= 1");
    const int q = mu.order();
    if (q < d) throw std::invalid_argument("hankel: requires q >= d, i.e. at least d+1 moments");

    const int rows = q - d + 1;
    Eigen::MatrixXd H(rows, d);
    Eigen::VectorXd rhs(rows);
    for (int r = 0; r < rows; ++r) {
        const int l = d + r;
        for (int i = 1; i <= d; ++i)
            H(r, i - 1) = mu[static_cast<std::size_t>(l - i)];
        rhs(r) = -mu[static_cast<std::size_t>(l)];
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * smax) ++rank;
    if (smax == 0.0) rank = 0;

    // Minimum-norm solution from the truncated pseudo-inverse.
    Eigen::VectorXd coef = svd.matrixU().transpose() * rhs;
    Eigen::VectorXd p = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < rank; ++i)
        p += (coef(i) / sv(i)) * svd.matrixV().col(i);

    AffineSolutionSet set;
    set.ambient_dim = d;
    set.rank = rank;

    const double rhs_norm = rhs.size() > 0 ? rhs.lpNorm<Eigen::Infinity>() : 0.0;
    const double residual = (H * p - rhs).lpNorm<Eigen::Infinity>();
    if (residual > 1e-8 * (1.0 + rhs_norm)) return set; // inconsistent: empty

    set.particular = std::vector<double>(p.data(), p.data() + d);
    for (int i = rank; i < d; ++i) {
        Eigen::VectorXd v = svd.matrixV().col(i);
        for (int j = 0; j < d; ++j) {
            if (std::abs(v(j)) > 1e-12) {
                if (v(j) < 0.0) v = -v;
                break;
            }
        }
        set.basis.emplace_back(v.data(), v.data() + d);
    }
    return set;
}

double hankel_row_residual(const MomentVector& mu, int d, const std::vector<double>& sigma) {
    const int q = mu.order();
    double worst = 0.0;
    for (int l = d; l <= q; ++l) {
        double acc = mu[static_cast<std::size_t>(l)];
        for (int i = 1; i <= d; ++i)
            acc += mu[static_cast<std::size_t>(l - i)] * sigma[static_cast<std::size_t>(i - 1)];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

} // namespace prony
