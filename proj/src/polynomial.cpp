#include "prony/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prony {

namespace {

// Dense coefficients in descending powers; front() is the (nonzero) leading
// coefficient. Every chain member is rescaled to unit max-coefficient, which
// leaves all Sturm signs intact and avoids overflow for high degrees.
using Coeffs = std::vector<double>;

double max_abs(const Coeffs& c) {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

void scale_to_unit(Coeffs& c) {
    const double m = max_abs(c);
    if (m > 0.0)
        for (double& v : c) v /= m;
}

Coeffs full_coeffs(const MonicRealPolynomial& q) {
    Coeffs c(q.sigma.size() + 1);
    c[0] = 1.0;
    std::copy(q.sigma.begin(), q.sigma.end(), c.begin() + 1);
    return c;
}

Coeffs derivative(const Coeffs& c) {
    const int n = static_cast<int>(c.size()) - 1; // degree
    if (n <= 0) return Coeffs{};
    Coeffs d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        d[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * (n - i);
    return d;
}

double horner(const Coeffs& c, double x) {
    double v = 0.0;
    for (double ci : c) v = v * x + ci;
    return v;
}

// Remainder of a by b, with leading noise trimmed. Inputs are unit-scaled.
Coeffs poly_remainder(const Coeffs& a, const Coeffs& b) {
    Coeffs r = a;
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= db) {
        const double factor = r[0] / b[0];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= factor * b[i];
        r.erase(r.begin());
        // drop leading coefficients that are cancellation residue
        while (!r.empty() && static_cast<int>(r.size()) - 1 >= db &&
               std::abs(r[0]) <= 1e-14 * std::max(1.0, max_abs(r)))
            r.erase(r.begin());
    }
    while (!r.empty() && std::abs(r[0]) <= 1e-14 * max_abs(r)) r.erase(r.begin());
    return r;
}

struct SturmChain {
    std::vector<Coeffs> polys;
};

SturmChain sturm_chain(const MonicRealPolynomial& q) {
    SturmChain chain;
    Coeffs p0 = full_coeffs(q);
    scale_to_unit(p0);
    chain.polys.push_back(p0);
    Coeffs p1 = derivative(p0);
    if (p1.empty()) return chain;
    scale_to_unit(p1);
    chain.polys.push_back(p1);
    while (chain.polys.back().size() > 1) {
        const Coeffs& prev = chain.polys[chain.polys.size() - 2];
        const Coeffs& cur = chain.polys.back();
        Coeffs r = poly_remainder(prev, cur);
        if (r.empty() || max_abs(r) <= 1e-13) break; // nontrivial gcd: multiple roots
        for (double& v : r) v = -v;
        scale_to_unit(r);
        chain.polys.push_back(std::move(r));
    }
    return chain;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(const SturmChain& chain, double x) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (const Coeffs& p : chain.polys) signs.push_back(sign_of(horner(p, x)));
    return variations(signs);
}

int variations_at_infinity(const SturmChain& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (const Coeffs& p : chain.polys) {
        const int deg = static_cast<int>(p.size()) - 1;
        int s = sign_of(p[0]);
        if (!positive && (deg % 2 == 1)) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

double cauchy_bound(const MonicRealPolynomial& q) {
    double m = 0.0;
    for (double s : q.sigma) m = std::max(m, std::abs(s));
    return 1.0 + m;
}

// Roots counted in (a, b] by the chain; assumes a < b.
int roots_in(const SturmChain& chain, double a, double b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

} // namespace

// Compensated Horner (FMA error-free transformations): evaluation error
// stays near eps*|Q(z)| even when the plain sum cancels heavily, which is
// what limits root accuracy for clustered roots.
double MonicRealPolynomial::evaluate(double z) const {
    double s = 1.0, e = 0.0;
    for (double c : sigma) {
        const double p = s * z;
        const double ep = std::fma(s, z, -p);
        const double t = p + c;
        const double w = t - p;
        const double es = (p - (t - w)) + (c - w);
        s = t;
        e = e * z + (ep + es);
    }
    return s + e;
}

double MonicRealPolynomial::derivative_at(double z) const {
    const int d = degree();
    double v = static_cast<double>(d);
    for (int i = 1; i < d; ++i)
        v = v * z + sigma[static_cast<std::size_t>(i - 1)] * (d - i);
    return v;
}

MonicRealPolynomial vieta_map(const std::vector<double>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("vieta_map: empty node list");
    for (std::size_t j = 1; j < nodes.size(); ++j)
        if (!(nodes[j - 1] < nodes[j]))
            throw std::invalid_argument("vieta_map: nodes must be strictly increasing");

    std::vector<double> c{1.0}; // coefficients of prod (z - x_j), descending
    for (double x : nodes) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] -= x * c[i - 1];
    }
    MonicRealPolynomial q;
    q.sigma.assign(c.begin() + 1, c.end());
    return q;
}

int count_distinct_real_roots(const MonicRealPolynomial& q) {
    if (q.degree() == 0) return 0;
    const SturmChain chain = sturm_chain(q);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<double> real_roots(const MonicRealPolynomial& q) {
    const int d = q.degree();
    std::vector<double> roots;
    if (d == 0) return roots;
    if (d == 1) {
        roots.push_back(-q.sigma[0]);
        return roots;
    }

    const SturmChain chain = sturm_chain(q);
    const double bound = cauchy_bound(q);
    const double width_tol = 1e-12 * std::max(1.0, bound);

    struct Interval {
        double a, b;
        int count;
    };
    std::vector<Interval> stack;
    std::vector<Interval> isolated;
    {
        const int total = roots_in(chain, -bound, bound);
        if (total > 0) stack.push_back({-bound, bound, total});
    }
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.count == 1) {
            isolated.push_back(iv);
            continue;
        }
        const double mid = 0.5 * (iv.a + iv.b);
        if (!(mid > iv.a && mid < iv.b)) {
            // interval has collapsed with several roots inside: treat as one
            isolated.push_back({iv.a, iv.b, 1});
            continue;
        }
        const int left = roots_in(chain, iv.a, mid);
        if (left > 0) stack.push_back({iv.a, mid, left});
        if (iv.count - left > 0) stack.push_back({mid, iv.b, iv.count - left});
    }

    std::sort(isolated.begin(), isolated.end(),
              [](const Interval& u, const Interval& v) { return u.a < v.a; });

    for (Interval iv : isolated) {
        double a = iv.a, b = iv.b;
        // fast path: simple root with a sign change over the interval
        double fa = q.evaluate(a), fb = q.evaluate(b);
        if (fa == 0.0) {
            roots.push_back(a);
            continue;
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            while (b - a > width_tol) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                const double fm = q.evaluate(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) != (fm < 0.0))
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
        } else {
            // even-multiplicity root: no sign change, narrow by Sturm counts
            while (b - a > width_tol) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                if (roots_in(chain, a, mid) >= 1)
                    b = mid;
                else
                    a = mid;
            }
        }
        double x = 0.5 * (a + b);
        for (int step = 0; step < 3; ++step) {
            const double f = q.evaluate(x);
            const double fp = q.derivative_at(x);
            if (fp == 0.0) break;
            const double next = x - f / fp;
            if (std::abs(next - x) > 4.0 * (b - a) + width_tol) break; // Newton escaped
            x = next;
        }
        roots.push_back(x);
    }
    return roots;
}

bool is_hyperbolic(const MonicRealPolynomial& q, double gap_tol) {
    const int d = q.degree();
    if (d == 0) return false;
    if (count_distinct_real_roots(q) != d) return false;
    if (d == 1) return true;
    const std::vector<double> roots = real_roots(q);
    if (static_cast<int>(roots.size()) != d) return false;
    for (std::size_t j = 1; j < roots.size(); ++j)
        if (!(roots[j] - roots[j - 1] > gap_tol)) return false;
    return true;
}

std::vector<double> root_mapping(const MonicRealPolynomial& q, double gap_tol) {
    if (!is_hyperbolic(q, gap_tol))
        throw std::domain_error("root_mapping: polynomial is not hyperbolic");
    return real_roots(q);
}

double moment_recurrence_check(const MomentVector& mu, const MonicRealPolynomial& q) {
    const int d = q.degree();
    const int qmax = mu.order();
    if (qmax < d)
        throw std::invalid_argument("moment_recurrence_check: need at least d+1 moments");
    double worst = 0.0;
    for (int k = d; k <= qmax; ++k) {
        double acc = mu[static_cast<std::size_t>(k)];
        for (int s = 1; s <= d; ++s)
            acc += q.sigma[static_cast<std::size_t>(s - 1)] * mu[static_cast<std::size_t>(k - s)];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

} // namespace prony
