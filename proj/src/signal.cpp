#include "prony/signal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace prony {

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// Neumaier variant of compensated summation.
inline void comp_add(double& sum, double& comp, double term) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
        comp += (sum - t) + term;
    else
        comp += (term - t) + sum;
    sum = t;
}

} // namespace

void validate(const Signal& f) {
    if (f.amplitudes.size() != f.nodes.size())
        throw std::invalid_argument("signal: amplitudes and nodes must have equal length");
    if (f.nodes.empty())
        throw std::invalid_argument("signal: at least one node required");
    if (!all_finite(f.amplitudes) || !all_finite(f.nodes))
        throw std::invalid_argument("signal: entries must be finite");
    for (std::size_t j = 1; j < f.nodes.size(); ++j)
        if (!(f.nodes[j - 1] < f.nodes[j]))
            throw std::invalid_argument("signal: nodes must be strictly increasing");
}

void validate(const MomentVector& mu) {
    if (mu.values.empty())
        throw std::invalid_argument("moments: at least one value required");
    if (!all_finite(mu.values))
        throw std::invalid_argument("moments: entries must be finite");
}

void validate(const ModelTransform& t) {
    if (!(t.h > 0.0) || !std::isfinite(t.h) || !std::isfinite(t.kappa))
        throw std::invalid_argument("transform: h must be positive and finite");
}

void validate(const RegularityParams& p, std::size_t d) {
    if (!(p.eta > 0.0))
        throw std::invalid_argument("regularity: eta must be positive");
    if (d > 1 && p.eta > 2.0 / static_cast<double>(d - 1))
        throw std::invalid_argument("regularity: eta must be at most 2/(d-1)");
    if (!(0.0 < p.m && p.m < p.M))
        throw std::invalid_argument("regularity: need 0 < m < M");
}

MomentVector moments(const Signal& f, int count) {
    validate(f);
    if (count < 1) throw std::invalid_argument("moments: count must be >= 1");

    std::vector<double> sum(static_cast<std::size_t>(count), 0.0);
    std::vector<double> comp(static_cast<std::size_t>(count), 0.0);
    for (std::size_t j = 0; j < f.size(); ++j) {
        double term = f.amplitudes[j]; // a_j * x_j^k, built incrementally
        for (int k = 0; k < count; ++k) {
            comp_add(sum[static_cast<std::size_t>(k)], comp[static_cast<std::size_t>(k)], term);
            term *= f.nodes[j];
        }
    }
    MomentVector mu;
    mu.values.resize(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        mu.values[static_cast<std::size_t>(k)] =
            sum[static_cast<std::size_t>(k)] + comp[static_cast<std::size_t>(k)];
    return mu;
}

Normalized normalize(const Signal& f) {
    validate(f);
    if (f.size() < 2)
        throw std::domain_error("normalize: signal spread is zero for d = 1");
    const double x_first = f.nodes.front();
    const double x_last = f.nodes.back();
    ModelTransform t;
    t.kappa = 0.5 * (x_first + x_last);
    t.h = 0.5 * (x_last - x_first);
    return Normalized{apply_transform(t, f, Direction::Forward), t};
}

Signal apply_transform(const ModelTransform& t, const Signal& f, Direction dir) {
    validate(t);
    validate(f);
    Signal g = f;
    for (double& x : g.nodes)
        x = (dir == Direction::Forward) ? (x - t.kappa) / t.h : t.h * x + t.kappa;
    return g;
}

bool is_regular(const Signal& g, const RegularityParams& p) {
    validate(g);
    validate(p, g.size());
    for (std::size_t j = 1; j < g.size(); ++j)
        if (g.nodes[j] - g.nodes[j - 1] < p.eta) return false;
    for (double a : g.amplitudes) {
        const double mag = std::abs(a);
        if (mag < p.m || mag > p.M) return false;
    }
    return true;
}

double moment_metric(const Signal& g1, const Signal& g2, int order) {
    validate(g1);
    validate(g2);
    if (g1.size() != g2.size())
        throw std::invalid_argument("moment_metric: signals must share d");
    if (order < 0) order = 2 * static_cast<int>(g1.size()) - 1;
    const MomentVector m1 = moments(g1, order + 1);
    const MomentVector m2 = moments(g2, order + 1);
    double dist = 0.0;
    for (int k = 0; k <= order; ++k)
        dist = std::max(dist, std::abs(m2[static_cast<std::size_t>(k)] -
                                       m1[static_cast<std::size_t>(k)]));
    return dist;
}

bool in_error_set(const Signal& fprime, const Signal& f, double eps, double slack) {
    return in_moment_parallelepiped(fprime, f, eps, 1.0, slack);
}

bool in_moment_parallelepiped(const Signal& gprime, const Signal& g, double eps, double h,
                              double slack) {
    validate(gprime);
    validate(g);
    if (gprime.size() != g.size())
        throw std::invalid_argument("moment parallelepiped: signals must share d");
    if (!(h > 0.0))
        throw std::invalid_argument("moment parallelepiped: h must be positive");
    const int count = 2 * static_cast<int>(g.size());
    const MomentVector mg = moments(g, count);
    const MomentVector mp = moments(gprime, count);
    double bound = eps;
    for (int k = 0; k < count; ++k) {
        if (std::abs(mp[static_cast<std::size_t>(k)] - mg[static_cast<std::size_t>(k)]) >
            bound + slack)
            return false;
        bound /= h;
    }
    return true;
}

namespace {
double euclid(const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        s += d * d;
    }
    return std::sqrt(s);
}
} // namespace

double amplitude_distance(const Signal& a, const Signal& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: signals must share d");
    return euclid(a.amplitudes, b.amplitudes);
}

double node_distance(const Signal& a, const Signal& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: signals must share d");
    return euclid(a.nodes, b.nodes);
}

double signal_distance(const Signal& a, const Signal& b) {
    const double da = amplitude_distance(a, b);
    const double dx = node_distance(a, b);
    return std::sqrt(da * da + dx * dx);
}

MomentVector transport_moments(const MomentVector& mu, const ModelTransform& t) {
    validate(mu);
    validate(t);
    const std::size_t n = mu.size();
    MomentVector out;
    out.values.resize(n);
    std::vector<double> binom(n, 0.0); // Pascal row: binom[i] = C(k, i)
    binom[0] = 1.0;
    double h_pow = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0)
            for (std::size_t i = k; i >= 1; --i) binom[i] += binom[i - 1];
        double acc = 0.0;
        double shift_pow = 1.0; // (-kappa)^{k-i}, built from i = k downward
        for (std::size_t i = k + 1; i-- > 0;) {
            acc += binom[i] * shift_pow * mu[i];
            shift_pow *= -t.kappa;
        }
        out.values[k] = acc / h_pow;
        h_pow *= t.h;
    }
    return out;
}

} // namespace prony
