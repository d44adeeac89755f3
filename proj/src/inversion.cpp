#include "prony/inversion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace prony {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Unique: return "UNIQUE";
        case SolveStatus::Empty: return "EMPTY";
        case SolveStatus::NonHyperbolic: return "NON_HYPERBOLIC";
        case SolveStatus::Degenerate: return "DEGENERATE";
    }
    return "UNKNOWN";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double min_gap(const std::vector<double>& sorted) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < sorted.size(); ++j) g = std::min(g, sorted[j] - sorted[j - 1]);
    return g;
}

MomentVector head_moments(const MomentVector& mu, int count) {
    MomentVector out;
    out.values.assign(mu.values.begin(), mu.values.begin() + count);
    return out;
}

double moment_residual(const Signal& s, const MomentVector& mu) {
    const MomentVector check = moments(s, static_cast<int>(mu.size()));
    double worst = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k)
        worst = std::max(worst, std::abs(check[k] - mu[k]));
    return worst;
}

// Newton steps on the full nonlinear system sum_j a_j x_j^k = mu_k. The
// classical linear pipeline loses digits for offset clusters; two polish
// steps recover them. Keeps the incumbent whenever a step degrades the
// residual or breaks node ordering.
void newton_polish(Signal& s, const MomentVector& mu) {
    const int d = static_cast<int>(s.size());
    const int n = 2 * d;
    double best = moment_residual(s, mu);
    for (int iter = 0; iter < 3; ++iter) {
        Eigen::MatrixXd jac(n, n);
        Eigen::VectorXd resid(n);
        const MomentVector got = moments(s, n);
        for (int k = 0; k < n; ++k) {
            resid(k) = got[static_cast<std::size_t>(k)] - mu[static_cast<std::size_t>(k)];
            for (int j = 0; j < d; ++j) {
                const double x = s.nodes[static_cast<std::size_t>(j)];
                const double xk1 = k > 0 ? std::pow(x, k - 1) : 0.0;
                jac(k, j) = k > 0 ? xk1 * x : 1.0;
                jac(k, d + j) = k * s.amplitudes[static_cast<std::size_t>(j)] * xk1;
            }
        }
        const Eigen::VectorXd delta = jac.partialPivLu().solve(resid);
        if (!delta.allFinite()) break;
        Signal trial = s;
        for (int j = 0; j < d; ++j) {
            trial.amplitudes[static_cast<std::size_t>(j)] -= delta(j);
            trial.nodes[static_cast<std::size_t>(j)] -= delta(d + j);
        }
        bool ordered = true;
        for (int j = 1; j < d; ++j)
            if (!(trial.nodes[static_cast<std::size_t>(j - 1)] <
                  trial.nodes[static_cast<std::size_t>(j)]))
                ordered = false;
        if (!ordered) break;
        const double res = moment_residual(trial, mu);
        if (!(res < best)) break;
        best = res;
        s = std::move(trial);
    }
}

} // namespace

InversionResult prony_solve(const MomentVector& mu, int d, const SolveOptions& opts) {
    if (d < 1) throw std::invalid_argument("prony_solve: d must be >= 1");
    if (static_cast<int>(mu.size()) != 2 * d)
        throw std::invalid_argument("prony_solve: mu must hold exactly 2d values");

    InversionResult result;
    const AffineSolutionSet set = hankel_solution_set(mu, d, opts.rank_tol);
    if (set.empty()) {
        result.status = SolveStatus::Empty;
        return result;
    }
    result.sigma = *set.particular;
    if (set.dimension() > 0) {
        result.status = SolveStatus::Degenerate;
        return result;
    }

    MonicRealPolynomial poly;
    poly.sigma = result.sigma;
    if (!is_hyperbolic(poly, opts.gap_tol)) {
        result.status = SolveStatus::NonHyperbolic;
        return result;
    }

    Signal s;
    s.nodes = real_roots(poly);
    s.amplitudes = vandermonde_amplitudes(s.nodes, head_moments(mu, d), opts.gap_tol * 0.5);
    newton_polish(s, mu);

    const double residual = moment_residual(s, mu);
    result.residual = residual;
    result.min_node_gap = d > 1 ? min_gap(s.nodes) : std::numeric_limits<double>::infinity();
    if (residual > 1e-8 * (1.0 + max_abs(mu.values))) {
        // numerically unresolvable: the sigma system was formally full rank
        // but the reconstruction does not reproduce the data
        result.status = SolveStatus::Degenerate;
        return result;
    }
    result.status = SolveStatus::Unique;
    result.signal = std::move(s);
    return result;
}

namespace {

// One cube draw: indices below `budget` are uniform samples, the rest
// enumerate the 2^{2d} corners.
MomentVector cube_draw(const MomentVector& center, double eps, std::size_t index,
                       std::size_t budget, std::uint64_t seed) {
    MomentVector mu = center;
    if (index < budget) {
        std::mt19937_64 rng(splitmix64(seed ^ static_cast<std::uint64_t>(index)));
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        for (double& v : mu.values) v += eps * unit(rng);
    } else {
        const std::size_t mask = index - budget;
        for (std::size_t k = 0; k < mu.values.size(); ++k)
            mu.values[k] += ((mask >> k) & 1u) ? eps : -eps;
    }
    return mu;
}

std::size_t corner_count(int d) {
    return (2 * d <= 20) ? (std::size_t{1} << (2 * d)) : 0;
}

} // namespace

ErrorSetSample sample_error_set(const Signal& f, double eps, std::size_t budget,
                                std::uint64_t seed, Exec exec, const SolveOptions& opts) {
    validate(f);
    if (!(eps >= 0.0)) throw std::invalid_argument("sample_error_set: eps must be >= 0");
    const int d = static_cast<int>(f.size());
    const MomentVector center = moments(f, 2 * d);
    if (prony_solve(center, d, opts).status != SolveStatus::Unique)
        throw std::domain_error("sample_error_set: cube center does not invert uniquely");

    std::vector<std::optional<Signal>> slots(budget);
    std::vector<MomentVector> drawn(budget);
    std::vector<char> failed(budget, 0);
    for_each_index(budget, exec, [&](std::size_t i) {
        const MomentVector mu = cube_draw(center, eps, i, budget, seed);
        const InversionResult r = prony_solve(mu, d, opts);
        if (r.status != SolveStatus::Unique) {
            failed[i] = 1;
            return;
        }
        if (!in_error_set(*r.signal, f, eps)) {
            failed[i] = 1;
            return;
        }
        slots[i] = *r.signal;
        drawn[i] = mu;
    });

    ErrorSetSample out;
    out.attempts = budget;
    for (std::size_t i = 0; i < budget; ++i) {
        if (slots[i].has_value()) {
            out.accepted.push_back(std::move(*slots[i]));
            out.accepted_mu.push_back(std::move(drawn[i]));
        } else if (failed[i]) {
            ++out.failures;
        }
    }
    out.acceptance_ratio =
        budget > 0 ? static_cast<double>(out.accepted.size()) / static_cast<double>(budget) : 1.0;
    return out;
}

WorstCaseErrors worst_case_errors(const Signal& f, double eps, std::size_t budget,
                                  std::uint64_t seed, Exec exec, const SolveOptions& opts) {
    validate(f);
    const int d = static_cast<int>(f.size());
    const MomentVector center = moments(f, 2 * d);
    if (prony_solve(center, d, opts).status != SolveStatus::Unique)
        throw std::domain_error("worst_case_errors: cube center does not invert uniquely");

    const std::size_t total = budget + corner_count(d);
    // corners sit exactly on the cube boundary; allow rounding-level leakage
    const double slack = 1e-10 * (1.0 + max_abs(center.values));

    std::vector<double> da(total, -1.0), dx(total, -1.0), df(total, -1.0);
    std::vector<char> failed(total, 0);
    for_each_index(total, exec, [&](std::size_t i) {
        const MomentVector mu = cube_draw(center, eps, i, budget, seed);
        const InversionResult r = prony_solve(mu, d, opts);
        if (r.status != SolveStatus::Unique || !in_error_set(*r.signal, f, eps, slack)) {
            failed[i] = 1;
            return;
        }
        da[i] = amplitude_distance(*r.signal, f);
        dx[i] = node_distance(*r.signal, f);
        df[i] = signal_distance(*r.signal, f);
    });

    WorstCaseErrors out;
    for (std::size_t i = 0; i < total; ++i) {
        if (failed[i]) {
            ++out.failures;
            continue;
        }
        if (da[i] < 0.0) continue;
        ++out.samples;
        out.rho_A = std::max(out.rho_A, da[i]);
        out.rho_X = std::max(out.rho_X, dx[i]);
        out.rho = std::max(out.rho, df[i]);
    }
    return out;
}

double hausdorff_distance(const std::vector<Signal>& a, const std::vector<Signal>& b, Exec exec) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_distance: clouds must be non-empty");
    for (const Signal& s : a)
        if (s.size() != a.front().size())
            throw std::invalid_argument("hausdorff_distance: mixed dimensions");
    for (const Signal& s : b)
        if (s.size() != a.front().size())
            throw std::invalid_argument("hausdorff_distance: mixed dimensions");

    const std::size_t d2 = a.front().size() * 2;
    auto flatten = [d2](const std::vector<Signal>& cloud) {
        std::vector<double> flat(cloud.size() * d2);
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const Signal& s = cloud[i];
            std::copy(s.amplitudes.begin(), s.amplitudes.end(), flat.begin() + i * d2);
            std::copy(s.nodes.begin(), s.nodes.end(), flat.begin() + i * d2 + s.size());
        }
        return flat;
    };
    const std::vector<double> fa = flatten(a);
    const std::vector<double> fb = flatten(b);

    auto directed = [&](const std::vector<double>& from, std::size_t nfrom,
                        const std::vector<double>& to, std::size_t nto) {
        std::vector<double> mins(nfrom);
        for_each_index(nfrom, exec, [&](std::size_t i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < nto; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < d2; ++k) {
                    const double diff = from[i * d2 + k] - to[j * d2 + k];
                    s += diff * diff;
                }
                best = std::min(best, s);
            }
            mins[i] = best;
        });
        double worst = 0.0;
        for (double m : mins) worst = std::max(worst, m);
        return std::sqrt(worst);
    };

    return std::max(directed(fa, a.size(), fb, b.size()), directed(fb, b.size(), fa, a.size()));
}

namespace {

// Shared parameter window for comparing a reference leaf cloud with the
// clouds of perturbed leaves: both sides are evaluated at the same parameter
// tuples, so Hausdorff distances resolve displacements far below the grid
// spacing.
struct LeafWindow {
    bool low_q = false;
    int dim = 0;
    std::vector<std::vector<double>> tuples; // node+amp tuples (low q) or t vectors
    AffineSolutionSet ref_set;               // high q only
};

std::vector<std::vector<double>> grid_tuples(int dim, double lo, double hi, int per_dim) {
    std::vector<std::vector<double>> tuples;
    if (dim == 0) {
        tuples.push_back({});
        return tuples;
    }
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(per_dim);
    tuples.reserve(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<double> t(static_cast<std::size_t>(dim));
        std::size_t rem = flat;
        for (int a = dim - 1; a >= 0; --a) {
            const int gi = static_cast<int>(rem % static_cast<std::size_t>(per_dim));
            rem /= static_cast<std::size_t>(per_dim);
            t[static_cast<std::size_t>(a)] = GridSpec{lo, hi, per_dim}.value(gi);
        }
        tuples.push_back(std::move(t));
    }
    return tuples;
}

int per_dim_count(std::size_t cloud_size, int dim) {
    if (dim <= 0) return 1;
    const double m = std::pow(static_cast<double>(cloud_size), 1.0 / dim);
    return std::max(2, static_cast<int>(std::llround(m)));
}

// Point of the leaf with moments mu_head (q+1 model moments) at the given
// window tuple; nullopt when the tuple leaves the hyperbolic set.
std::optional<Signal> window_point(const LeafWindow& w, const AffineSolutionSet& set,
                                   const MomentVector& mu_head, int d, double gap_tol,
                                   const std::vector<double>& tuple) {
    Signal s;
    if (w.low_q) {
        s.nodes.assign(tuple.begin(), tuple.begin() + d);
        if (d > 1 && !(min_gap(s.nodes) > gap_tol)) return std::nullopt;
        const std::vector<double> free_amps(tuple.begin() + d, tuple.end());
        s.amplitudes = leaf_amplitudes_low_q(mu_head, s.nodes, free_amps, gap_tol * 0.5);
        return s;
    }
    MonicRealPolynomial poly;
    poly.sigma = set.point(tuple);
    if (count_distinct_real_roots(poly) != d) return std::nullopt;
    s.nodes = real_roots(poly);
    if (static_cast<int>(s.nodes.size()) != d) return std::nullopt;
    if (d > 1 && !(min_gap(s.nodes) > gap_tol)) return std::nullopt;
    s.amplitudes = vandermonde_amplitudes(s.nodes, head_moments(mu_head, d), gap_tol * 0.5);
    return s;
}

LeafErrorResult leaf_error_for(const Signal& f, const Normalized& norm, int q, double eps,
                               double radius, std::size_t budget, std::uint64_t seed,
                               const LeafErrorConfig& cfg, Exec exec) {
    const int d = static_cast<int>(f.size());
    if (q < 0 || q > 2 * d - 1)
        throw std::invalid_argument("leaf_reconstruction_error: q must lie in 0..2d-1");
    const MomentVector center = moments(f, 2 * d);
    if (prony_solve(center, d).status != SolveStatus::Unique)
        throw std::domain_error("leaf_reconstruction_error: center does not invert uniquely");

    const Signal& g = norm.model;
    const ModelTransform& t = norm.transform;
    const MomentVector model_center = moments(g, 2 * d + 1);
    const MomentVector mu_head = head_moments(model_center, q + 1);

    // reference window and cloud
    LeafWindow window;
    window.low_q = q <= d - 1;
    std::vector<std::vector<double>> candidates;
    if (window.low_q) {
        window.dim = 2 * d - q - 1;
        const int per_dim = per_dim_count(cfg.cloud_size, window.dim);
        const double span = radius / std::sqrt(2.0 * d);
        candidates = grid_tuples(window.dim, -span, span, per_dim);
        // offsets around the model signal's own coordinates
        for (auto& tuple : candidates) {
            for (int j = 0; j < d; ++j)
                tuple[static_cast<std::size_t>(j)] += g.nodes[static_cast<std::size_t>(j)];
            for (int s = 0; s < window.dim - d; ++s)
                tuple[static_cast<std::size_t>(d + s)] +=
                    g.amplitudes[static_cast<std::size_t>(q + 1 + s)];
        }
    } else {
        window.ref_set = hankel_solution_set(mu_head, d);
        if (window.ref_set.empty())
            throw std::domain_error("leaf_reconstruction_error: reference leaf is degenerate");
        window.dim = window.ref_set.dimension();
        const int per_dim = per_dim_count(cfg.cloud_size, window.dim);
        candidates = grid_tuples(window.dim, -cfg.box, cfg.box, per_dim);
    }

    // ref_cloud: leaf sample inside B_radius(G), used for the Hausdorff
    // estimator. conv_cloud: the whole boxed leaf sample, used for
    // distance-to-leaf diagnostics (the eps = C h^{q+1} regime spreads the
    // error set along the leaf well past any fixed ball).
    std::vector<Signal> ref_cloud, conv_cloud;
    for (const auto& tuple : candidates) {
        const std::optional<Signal> pt =
            window_point(window, window.ref_set, mu_head, d, cfg.gap_tol, tuple);
        if (!pt.has_value()) continue;
        conv_cloud.push_back(*pt);
        if (signal_distance(*pt, g) > radius) continue;
        window.tuples.push_back(tuple);
        ref_cloud.push_back(*pt);
    }
    if (ref_cloud.empty())
        throw std::domain_error("leaf_reconstruction_error: no leaf points inside the ball");

    LeafErrorResult out;
    // fill radius: max nearest-neighbor spacing of the reference cloud
    if (ref_cloud.size() > 1) {
        double fill = 0.0;
        for (std::size_t i = 0; i < ref_cloud.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < ref_cloud.size(); ++j) {
                if (i == j) continue;
                best = std::min(best, signal_distance(ref_cloud[i], ref_cloud[j]));
            }
            fill = std::max(fill, best);
        }
        out.fill_radius = fill;
    }

    const std::size_t total = budget + corner_count(d);
    std::vector<double> dh(total, -1.0), dist(total, -1.0), section(total, -1.0);
    std::vector<char> failed(total, 0), empty_leaf(total, 0);
    for_each_index(total, exec, [&](std::size_t i) {
        const MomentVector mu = cube_draw(center, eps, i, budget, seed);
        const InversionResult r = prony_solve(mu, d);
        if (r.status != SolveStatus::Unique) {
            failed[i] = 1;
            return;
        }
        const Signal g_prime = apply_transform(t, *r.signal, Direction::Forward);
        const MomentVector model_mu = transport_moments(mu, t);
        const MomentVector mu_head_prime = head_moments(model_mu, q + 1);

        AffineSolutionSet set_prime;
        if (!window.low_q) {
            set_prime = hankel_solution_set(mu_head_prime, d);
            if (set_prime.empty() || set_prime.dimension() != window.dim) {
                empty_leaf[i] = 1;
                return;
            }
        }

        // perturbed cloud over the shared window; compare only tuples valid
        // on both leaves
        std::vector<Signal> pair_ref, pair_pert;
        pair_ref.reserve(window.tuples.size());
        pair_pert.reserve(window.tuples.size());
        for (std::size_t w = 0; w < window.tuples.size(); ++w) {
            const std::optional<Signal> pt =
                window_point(window, set_prime, mu_head_prime, d, cfg.gap_tol, window.tuples[w]);
            if (!pt.has_value()) continue;
            if (signal_distance(*pt, g) > radius) continue;
            pair_ref.push_back(ref_cloud[w]);
            pair_pert.push_back(*pt);
        }
        if (pair_pert.empty()) {
            empty_leaf[i] = 1;
            return;
        }
        dh[i] = hausdorff_distance(pair_ref, pair_pert, Exec::Serial);

        double best = std::numeric_limits<double>::infinity();
        for (const Signal& pt : conv_cloud) best = std::min(best, signal_distance(g_prime, pt));
        dist[i] = best;

        const MomentVector mg = moments(g_prime, q + 2);
        section[i] = std::abs(mg[static_cast<std::size_t>(q + 1)] -
                              model_center[static_cast<std::size_t>(q + 1)]);
    });

    for (std::size_t i = 0; i < total; ++i) {
        if (failed[i]) {
            ++out.failures;
            continue;
        }
        if (empty_leaf[i]) {
            ++out.empty_leaves;
            continue;
        }
        if (dh[i] < 0.0) continue;
        ++out.samples;
        out.rho_Sq = std::max(out.rho_Sq, dh[i]);
        out.dist_to_leaf = std::max(out.dist_to_leaf, dist[i]);
        out.section_dev = std::max(out.section_dev, section[i]);
    }
    return out;
}

} // namespace

LeafErrorResult leaf_reconstruction_error(const Signal& f, int q, double eps, double radius,
                                          std::size_t budget, std::uint64_t seed,
                                          const LeafErrorConfig& cfg, Exec exec) {
    validate(f);
    const Normalized norm = normalize(f);
    return leaf_error_for(f, norm, q, eps, radius, budget, seed, cfg, exec);
}

std::optional<SlopeFit> fit_loglog_slope(const std::vector<double>& h,
                                         const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < h.size() && i < y.size(); ++i) {
        if (std::isfinite(y[i]) && y[i] > 0.0 && std::isfinite(h[i]) && h[i] > 0.0) {
            lx.push_back(std::log(h[i]));
            ly.push_back(std::log(y[i]));
        }
    }
    const std::size_t n = lx.size();
    if (n < 2) return std::nullopt;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) return std::nullopt;
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.n = n;
    if (n > 2) {
        double ssr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = ly[i] - my - fit.slope * (lx[i] - mx);
            ssr += r * r;
        }
        fit.stderr_ = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
    } else {
        fit.stderr_ = std::numeric_limits<double>::quiet_NaN();
    }
    return fit;
}

std::pair<std::vector<ErrorSweepRecord>, SweepSummary> scaling_sweep(
    const Signal& g_model, const SweepConfig& cfg, const RegularityParams& regularity,
    Exec exec) {
    validate(g_model);
    if (!is_regular(g_model, regularity))
        throw std::invalid_argument("scaling_sweep: model signal is not regular for the given "
                                    "(eta, m, M)");
    if (cfg.h_values.empty())
        throw std::invalid_argument("scaling_sweep: need at least one h value");
    const int d = static_cast<int>(g_model.size());
    if (cfg.mode == SweepMode::Leaf && (cfg.q < 0 || cfg.q > 2 * d - 1))
        throw std::invalid_argument("scaling_sweep: leaf mode needs q in 0..2d-1");

    std::vector<ErrorSweepRecord> records;
    SweepSummary summary;
    for (double h : cfg.h_values) {
        if (!(h > 0.0)) throw std::invalid_argument("scaling_sweep: h values must be positive");
        const ModelTransform t{cfg.kappa, h};
        const Signal f = apply_transform(t, g_model, Direction::Inverse);
        const double eps = cfg.eps_c * std::pow(h, cfg.eps_exp);

        ErrorSweepRecord rec;
        rec.h = h;
        rec.eps = eps;
        rec.rho_Sq.assign(static_cast<std::size_t>(2 * d),
                          std::numeric_limits<double>::quiet_NaN());
        const double distortion = std::pow(1.0 + std::abs(cfg.kappa), 2.0 * d - 1.0);
        rec.eps_lower = eps / distortion;
        rec.eps_upper = eps * distortion;
        rec.rho = rec.rho_A = rec.rho_X = std::numeric_limits<double>::quiet_NaN();
        rec.dist_to_leaf = rec.section_dev = rec.fill_radius =
            std::numeric_limits<double>::quiet_NaN();

        if (cfg.mode == SweepMode::Full) {
            const WorstCaseErrors wc = worst_case_errors(f, eps, cfg.budget, cfg.seed, exec);
            rec.rho = wc.rho;
            rec.rho_A = wc.rho_A;
            rec.rho_X = wc.rho_X;
            rec.samples = wc.samples;
            rec.failures = wc.failures;
        } else {
            const Normalized norm{g_model, t};
            const LeafErrorResult le =
                leaf_error_for(f, norm, cfg.q, eps, cfg.radius, cfg.budget, cfg.seed, cfg.leaf,
                               exec);
            rec.rho_Sq[static_cast<std::size_t>(cfg.q)] = le.rho_Sq;
            rec.samples = le.samples;
            rec.failures = le.failures;
            rec.dist_to_leaf = le.dist_to_leaf;
            rec.section_dev = le.section_dev;
            rec.fill_radius = le.fill_radius;
        }
        if (rec.failures > 0 && rec.failures * 2 > rec.samples + rec.failures) {
            summary.warnings.push_back(
                "solver failed on more than half of the samples at h = " + std::to_string(h) +
                "; eps is above the solvability threshold");
        }
        records.push_back(std::move(rec));
    }

    std::vector<double> hs, rho, rho_a, rho_x, rho_sq;
    for (const ErrorSweepRecord& rec : records) {
        hs.push_back(rec.h);
        rho.push_back(rec.rho);
        rho_a.push_back(rec.rho_A);
        rho_x.push_back(rec.rho_X);
        if (cfg.mode == SweepMode::Leaf)
            rho_sq.push_back(rec.rho_Sq[static_cast<std::size_t>(cfg.q)]);
    }
    summary.slope_rho = fit_loglog_slope(hs, rho);
    summary.slope_rho_A = fit_loglog_slope(hs, rho_a);
    summary.slope_rho_X = fit_loglog_slope(hs, rho_x);
    if (cfg.mode == SweepMode::Leaf) summary.slope_rho_Sq = fit_loglog_slope(hs, rho_sq);
    return {std::move(records), std::move(summary)};
}

} // namespace prony
