#ifndef PRONY_SIGNAL_HPP
#define PRONY_SIGNAL_HPP

#include <cstddef>
#include <vector>

namespace prony {

// A spike train: d weighted delta-spikes with strictly increasing node
// positions. Immutable by convention; all operations below are pure.
struct Signal {
    std::vector<double> amplitudes; // a_1..a_d
    std::vector<double> nodes;      // x_1 < x_2 < ... < x_d

    std::size_t size() const { return nodes.size(); }
};

// Power moments m_0..m_q of a signal; the right-hand side of the moment
// equations sum_j a_j x_j^k = mu_k.
struct MomentVector {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    int order() const { return static_cast<int>(values.size()) - 1; }
    double operator[](std::size_t k) const { return values[k]; }
};

// Affine change of node coordinates x -> (x - kappa) / h. The forward map
// sends a signal with node interval [kappa-h, kappa+h] onto [-1, 1].
struct ModelTransform {
    double kappa = 0.0;
    double h = 1.0;
};

enum class Direction { Forward, Inverse };

// Separation/amplitude bounds: a signal is regular when neighbor node gaps
// are at least eta and every |a_j| lies in [m, M].
struct RegularityParams {
    double eta;
    double m;
    double M;
};

// Throws std::invalid_argument when the invariants fail (sizes, ordering,
// finiteness).
void validate(const Signal& f);
void validate(const MomentVector& mu);
void validate(const ModelTransform& t);
void validate(const RegularityParams& p, std::size_t d);

// First `count` moments of f, count >= 1. Powers accumulate per node in
// increasing order; sums use Neumaier compensation so that high-order
// moments of near-cancelling amplitudes stay accurate.
MomentVector moments(const Signal& f, int count);

// Centering/rescaling of a signal onto node interval [-1, 1].
struct Normalized {
    Signal model;
    ModelTransform transform;
};

// Requires d >= 2 (zero spread otherwise); throws std::domain_error.
Normalized normalize(const Signal& f);

Signal apply_transform(const ModelTransform& t, const Signal& f, Direction dir);

bool is_regular(const Signal& g, const RegularityParams& p);

// max_{k=0..order} |m_k(g2) - m_k(g1)|; order < 0 selects the default 2d-1.
double moment_metric(const Signal& g1, const Signal& g2, int order = -1);

// Membership in the error set: |m_k(fprime) - m_k(f)| <= eps + slack for
// k = 0..2d-1. Inclusive comparisons; boundary membership is sensitive to
// rounding, which is what the slack parameter is for (default 0).
bool in_error_set(const Signal& fprime, const Signal& f, double eps, double slack = 0.0);

// Membership in the moment parallelepiped: |m_k(gprime) - m_k(g)| <=
// eps * h^-k + slack for k = 0..2d-1. With h = 1 this is in_error_set.
bool in_moment_parallelepiped(const Signal& gprime, const Signal& g, double eps, double h,
                              double slack = 0.0);

// Euclidean distances in parameter space, nodes and amplitudes compared
// componentwise (both signals sorted by node).
double amplitude_distance(const Signal& a, const Signal& b);
double node_distance(const Signal& a, const Signal& b);
double signal_distance(const Signal& a, const Signal& b);

// Moments of the forward-transformed signal, computed directly from the raw
// moments: m_k(G) = h^-k * sum_i C(k,i) (-kappa)^{k-i} mu_i. Exact scaling
// h^-k * mu_k when kappa = 0.
MomentVector transport_moments(const MomentVector& mu, const ModelTransform& t);

} // namespace prony

#endif
