#ifndef PRONY_POLYNOMIAL_HPP
#define PRONY_POLYNOMIAL_HPP

#include <vector>

#include "prony/signal.hpp"

namespace prony {

// Monic real polynomial Q(z) = z^d + sigma_1 z^{d-1} + ... + sigma_d,
// stored by its non-leading coefficients sigma_1..sigma_d.
struct MonicRealPolynomial {
    std::vector<double> sigma;

    int degree() const { return static_cast<int>(sigma.size()); }
    double evaluate(double z) const;
    double derivative_at(double z) const;
};

constexpr double kDefaultGapTol = 1e-10;

// Coefficients of prod_j (z - x_j), expanded by sequential monomial
// multiplication. X must be strictly increasing.
MonicRealPolynomial vieta_map(const std::vector<double>& nodes);

// Number of distinct real roots of Q, via Sturm sign-variation counts at
// -inf and +inf. Exact for exact coefficients; the chain is rescaled at
// every step to dodge overflow.
int count_distinct_real_roots(const MonicRealPolynomial& q);

// Distinct real roots in ascending order, each isolated by Sturm bisection
// and polished by Newton steps. Returns fewer than degree() entries when
// roots are complex or multiple.
std::vector<double> real_roots(const MonicRealPolynomial& q);

// True iff Q has degree() real roots with pairwise gaps strictly above
// gap_tol (multiple roots sit on the boundary of the hyperbolic set and
// are excluded).
bool is_hyperbolic(const MonicRealPolynomial& q, double gap_tol = kDefaultGapTol);

// Ordered roots x_1 < ... < x_d of a hyperbolic Q; throws std::domain_error
// when Q is not hyperbolic at the given tolerance.
std::vector<double> root_mapping(const MonicRealPolynomial& q, double gap_tol = kDefaultGapTol);

// max_{k=d..q} |mu_k + sum_s sigma_s mu_{k-s}|: zero means mu follows the
// Taylor recurrence of a rational function with denominator Q.
double moment_recurrence_check(const MomentVector& mu, const MonicRealPolynomial& q);

} // namespace prony

#endif
