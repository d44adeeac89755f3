// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria. The CLI binary path is taken from argv[1] or
// PRONY_CLI_BIN (needed for the determinism criterion).
#include <Eigen/Dense>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "prony/inversion.hpp"
#include "prony/io.hpp"
#include "prony/leaves.hpp"

using namespace prony;
namespace fs = std::filesystem;

namespace {

std::string g_cli;

double mu_norm(const MomentVector& mu) {
    double m = 0.0;
    for (double v : mu.values) m = std::max(m, std::abs(v));
    return m;
}

// ---------------------------------------------------------------- criterion 1

// Gap-based draw: neighbor gaps uniform in [0.1, 0.5], cluster center in
// [-0.5, 0.5]. Keeps the moment map's conditioning bounded; free-offset
// tight clusters displace the exact solution of the rounded moments past
// the tolerance before any solver runs.
Signal random_signal_gaps(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> gap(0.1, 0.5), center(-0.5, 0.5);
    Signal s;
    s.nodes.resize(static_cast<std::size_t>(d));
    double spread = 0.0;
    std::vector<double> gaps(static_cast<std::size_t>(d - 1));
    for (double& g : gaps) {
        g = gap(rng);
        spread += g;
    }
    s.nodes[0] = center(rng) - 0.5 * spread;
    for (int j = 1; j < d; ++j)
        s.nodes[static_cast<std::size_t>(j)] =
            s.nodes[static_cast<std::size_t>(j - 1)] + gaps[static_cast<std::size_t>(j - 1)];
    s.amplitudes = oracles::random_amplitudes(rng, d, 0.1, 10.0);
    return s;
}

bool round_trip_inversion(std::string& detail) {
    std::mt19937_64 rng(2024);
    double worst_node = 0.0, worst_amp = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 1 + trial % 6;
        const Signal f = random_signal_gaps(rng, d);
        const InversionResult r = prony_solve(moments(f, 2 * d), d);
        if (r.status != SolveStatus::Unique) {
            detail = "solver not UNIQUE at trial " + std::to_string(trial);
            return false;
        }
        worst_node = std::max(worst_node, node_distance(*r.signal, f));
        worst_amp = std::max(worst_amp, amplitude_distance(*r.signal, f));
    }
    std::ostringstream ss;
    ss << "max node err " << worst_node << ", max amp err " << worst_amp;
    detail = ss.str();
    return worst_node <= 1e-8 && worst_amp <= 1e-7;
}

// ---------------------------------------------------------------- criterion 2

// Vieta row values sum_{i=0..d} mu_{l-i} sigma_i(X) for l = d..q, with sigma
// the monic coefficients of prod (z - x_j). Node-space only: no Hankel
// solve, no root extraction.
std::vector<double> vieta_rows(const MomentVector& mu, int d, int q,
                               const std::vector<double>& x) {
    std::vector<double> sigma{1.0};
    for (double xi : x) {
        sigma.push_back(0.0);
        for (std::size_t i = sigma.size() - 1; i >= 1; --i) sigma[i] -= xi * sigma[i - 1];
    }
    std::vector<double> rows;
    for (int l = d; l <= q; ++l) {
        double acc = 0.0;
        for (int i = 0; i <= d; ++i)
            acc += mu[static_cast<std::size_t>(l - i)] * sigma[static_cast<std::size_t>(i)];
        rows.push_back(acc);
    }
    return rows;
}

// Brute-force points of the row variety: multistart Levenberg-Marquardt on
// the row system straight in node space, numeric Jacobian. Independent of
// the sigma-space parametrization used by the library.
std::vector<std::vector<double>> brute_row_points(const MomentVector& mu, int d, int q,
                                                  double scale) {
    std::vector<std::vector<double>> starts;
    const int per_dim = d == 2 ? 14 : 7;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<double> x(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            x[static_cast<std::size_t>(j)] = -2.2 + 4.4 * idx[static_cast<std::size_t>(j)] / (per_dim - 1);
        bool increasing = true;
        for (int j = 1; j < d; ++j)
            if (x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j - 1)] < 0.05)
                increasing = false;
        if (increasing) starts.push_back(x);
        int j = d - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == per_dim - 1) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < d; ++l) idx[static_cast<std::size_t>(l)] = 0;
    }

    const int nr = q - d + 1;
    std::vector<std::vector<double>> points;
    for (const auto& start : starts) {
        std::vector<double> x = start;
        double lambda = 1e-6;
        for (int iter = 0; iter < 80; ++iter) {
            const std::vector<double> r = vieta_rows(mu, d, q, x);
            double rn = 0.0;
            for (double v : r) rn = std::max(rn, std::abs(v));
            if (rn <= 1e-12 * scale) break;
            Eigen::MatrixXd jac(nr, d);
            for (int j = 0; j < d; ++j) {
                const double step = 1e-7 * (1.0 + std::abs(x[static_cast<std::size_t>(j)]));
                std::vector<double> xp = x, xm = x;
                xp[static_cast<std::size_t>(j)] += step;
                xm[static_cast<std::size_t>(j)] -= step;
                const std::vector<double> rp = vieta_rows(mu, d, q, xp);
                const std::vector<double> rm = vieta_rows(mu, d, q, xm);
                for (int i = 0; i < nr; ++i)
                    jac(i, j) = (rp[static_cast<std::size_t>(i)] - rm[static_cast<std::size_t>(i)]) /
                                (2.0 * step);
            }
            Eigen::VectorXd rv(nr);
            for (int i = 0; i < nr; ++i) rv(i) = r[static_cast<std::size_t>(i)];
            // least-norm LM step
            const Eigen::MatrixXd gram =
                jac * jac.transpose() + lambda * Eigen::MatrixXd::Identity(nr, nr);
            const Eigen::VectorXd delta = jac.transpose() * gram.ldlt().solve(rv);
            bool moved = false;
            for (int j = 0; j < d; ++j) {
                x[static_cast<std::size_t>(j)] -= delta(j);
                if (std::abs(delta(j)) > 1e-15) moved = true;
                x[static_cast<std::size_t>(j)] =
                    std::clamp(x[static_cast<std::size_t>(j)], -10.0, 10.0);
            }
            if (!moved) break;
        }
        const std::vector<double> r = vieta_rows(mu, d, q, x);
        double rn = 0.0;
        for (double v : r) rn = std::max(rn, std::abs(v));
        if (rn > 1e-10 * scale) continue;
        std::sort(x.begin(), x.end());
        bool separated = true;
        for (int j = 1; j < d; ++j)
            if (x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j - 1)] < 1e-3)
                separated = false;
        if (!separated) continue;
        bool dup = false;
        for (const auto& p : points) {
            double dist = 0.0;
            for (int j = 0; j < d; ++j)
                dist = std::max(dist, std::abs(p[static_cast<std::size_t>(j)] -
                                               x[static_cast<std::size_t>(j)]));
            if (dist < 1e-5) dup = true;
        }
        if (!dup) points.push_back(x);
    }
    return points;
}

bool vieta_equivalence(std::string& detail) {
    std::mt19937_64 rng(4096);
    std::uniform_real_distribution<double> raw(-2.0, 2.0);
    std::size_t sampled_checked = 0, brute_checked = 0;
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 200; ++trial) {
            const int q = d + trial % d; // d..2d-1
            MomentVector mu;
            if (trial % 10 == 8) {
                // rank-deficient: moments of a signal with fewer spikes
                const Signal thin = oracles::random_signal_uniform(rng, d - 1, 1.0, 0.2);
                mu = moments(thin, q + 1);
            } else if (trial % 10 == 9) {
                // structured degenerate patterns, including inconsistent ones
                mu.values.assign(static_cast<std::size_t>(q + 1), 0.0);
                if (trial % 20 == 9)
                    mu.values.back() = 1.0; // inconsistent rows: empty variety
                else
                    mu.values.front() = 1.0 + raw(rng);
            } else {
                const Signal f = oracles::random_signal_uniform(rng, d, 1.0, 0.15);
                mu = moments(f, q + 1);
            }

            LeafSpec spec{mu, d, q};
            const double norm = mu_norm(mu);

            // direction 1: every sampled projection point completes to a
            // full-system residual <= 1e-7
            const LeafProjection proj = leaf_projection_high_q(spec);
            if (!proj.set.empty()) {
                LeafSamplerConfig cfg;
                cfg.gap_tol = 1e-6;
                cfg.grid = proj.set.dimension() <= 1 ? 41 : 15;
                cfg.box = 2.5;
                const LeafPointCloud cloud = sample_leaf_projection(proj, cfg);
                for (const LeafPoint& pt : cloud.points) {
                    Signal completed;
                    try {
                        completed = complete_leaf_point(pt.signal.nodes, spec, 1e-7);
                    } catch (const std::domain_error&) {
                        detail = "sampled point failed completion (d=" + std::to_string(d) +
                                 ", q=" + std::to_string(q) + ", trial " + std::to_string(trial) +
                                 ")";
                        return false;
                    }
                    const MomentVector got = moments(completed, q + 1);
                    for (int k = 0; k <= q; ++k)
                        if (std::abs(got[static_cast<std::size_t>(k)] -
                                     mu[static_cast<std::size_t>(k)]) > 1e-7 * (1.0 + norm)) {
                            detail = "completion residual above 1e-7";
                            return false;
                        }
                    ++sampled_checked;
                }
            }

            // direction 2: brute-force row-variety points (node space only)
            // satisfy the full system after amplitude completion
            for (const auto& x : brute_row_points(mu, d, q, 1.0 + norm)) {
                MomentVector head;
                head.values.assign(mu.values.begin(), mu.values.begin() + d);
                std::vector<double> amps;
                try {
                    amps = vandermonde_amplitudes(x, head, 1e-4);
                } catch (const std::domain_error&) {
                    continue; // near-coincident brute point: outside scope
                }
                const Signal s{amps, x};
                const MomentVector got = moments(s, q + 1);
                for (int k = 0; k <= q; ++k)
                    if (std::abs(got[static_cast<std::size_t>(k)] -
                                 mu[static_cast<std::size_t>(k)]) > 1e-6 * (1.0 + norm)) {
                        std::ostringstream ss;
                        ss << "brute point off the variety: d=" << d << " q=" << q << " k=" << k
                           << " gap "
                           << std::abs(got[static_cast<std::size_t>(k)] -
                                       mu[static_cast<std::size_t>(k)]);
                        detail = ss.str();
                        return false;
                    }
                ++brute_checked;
            }
        }
    }
    detail = std::to_string(sampled_checked) + " sampled points, " +
             std::to_string(brute_checked) + " brute-force points verified";
    return sampled_checked > 10000 && brute_checked > 1000;
}

// ---------------------------------------------------------------- criterion 3

bool two_node_classification(std::string& detail) {
    // canonical representatives
    struct Canon {
        std::vector<double> mu;
        TwoNodeCurveKind kind;
    };
    const std::vector<Canon> canon{
        {{1.0, 0.0, -1.0}, TwoNodeCurveKind::NonsingularHyperbola},
        {{1.0, 0.0, 1.0}, TwoNodeCurveKind::NonsingularHyperbola},
        {{1.0, 2.0, 4.0}, TwoNodeCurveKind::DegenerateLines},
        {{0.0, 1.0, 3.0}, TwoNodeCurveKind::StraightLine},
        {{0.0, 0.0, 1.0}, TwoNodeCurveKind::Empty},
        {{0.0, 0.0, 0.0}, TwoNodeCurveKind::WholePlane},
    };
    for (const Canon& c : canon) {
        const TwoNodeCurveClass got = classify_two_node_curve(MomentVector{c.mu});
        if (got.kind != c.kind) {
            detail = "canonical case misclassified";
            return false;
        }
    }
    {
        // crossing vs disjoint, encoded in the params
        const TwoNodeCurveClass crossing = classify_two_node_curve(MomentVector{{1.0, 0.0, -1.0}});
        const TwoNodeCurveClass disjoint = classify_two_node_curve(MomentVector{{1.0, 0.0, 1.0}});
        if (!(crossing.params[1] > 0.0 && disjoint.params[1] < 0.0)) {
            detail = "diagonal-crossing sign wrong";
            return false;
        }
        const TwoNodeCurveClass line = classify_two_node_curve(MomentVector{{0.0, 1.0, 3.0}});
        if (std::abs(line.params[0] - 3.0) > 1e-12) {
            detail = "line position wrong";
            return false;
        }
    }

    std::mt19937_64 rng(333);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double tol = 1e-12;
    std::size_t cross_validated = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const double mu0 = u(rng), mu1 = u(rng), mu2 = u(rng);
        const TwoNodeCurveClass got = classify_two_node_curve(MomentVector{{mu0, mu1, mu2}});
        // independent re-evaluation of the case table
        TwoNodeCurveKind want;
        if (std::abs(mu0) > tol)
            want = std::abs(mu0 * mu2 - mu1 * mu1) <= tol ? TwoNodeCurveKind::DegenerateLines
                                                          : TwoNodeCurveKind::NonsingularHyperbola;
        else if (std::abs(mu1) > tol)
            want = TwoNodeCurveKind::StraightLine;
        else if (std::abs(mu2) > tol)
            want = TwoNodeCurveKind::Empty;
        else
            want = TwoNodeCurveKind::WholePlane;
        if (got.kind != want) {
            detail = "case table mismatch at trial " + std::to_string(trial);
            return false;
        }

        // cross-validation in sigma space: the line sigma2 = (-mu2 - mu1 t)/mu0
        // meets the discriminant parabola iff mu0*mu2 - mu1^2 < 0
        const double disc = mu0 * mu2 - mu1 * mu1;
        if (std::abs(mu0) > 0.05 && std::abs(disc) > 1e-6) {
            const LeafProjection proj =
                leaf_projection_high_q(LeafSpec{MomentVector{{mu0, mu1, mu2}}, 2, 2});
            if (proj.set.empty()) {
                detail = "unexpected empty line";
                return false;
            }
            bool has_negative = false, has_positive = false;
            auto probe = [&](double t) {
                const std::vector<double> sigma = proj.set.point({t});
                const double delta = sigma[0] * sigma[0] - 4.0 * sigma[1];
                if (delta < 0.0) has_negative = true;
                if (delta > 0.0) has_positive = true;
            };
            // sample the line, including the point nearest the parabola
            for (int i = 0; i <= 40; ++i) probe(-20.0 + i);
            const double b0 = proj.set.basis[0][0], b1 = proj.set.basis[0][1];
            const double p0 = (*proj.set.particular)[0];
            // minimize (p0 + t b0)^2 - 4(p1 + t b1) over t (quadratic vertex)
            if (std::abs(b0) > 1e-12) probe((2.0 * b1 - p0 * b0) / (b0 * b0));
            const bool crosses = has_negative;
            if (crosses != (disc < 0.0)) {
                detail = "sigma-space discriminant signs disagree with mu0*mu2-mu1^2";
                return false;
            }
            if (disc > 0.0 && !(has_positive && !has_negative)) {
                detail = "line expected inside the hyperbolic set";
                return false;
            }
            ++cross_validated;
        }
    }
    detail = "10000 triples + canon table, " + std::to_string(cross_validated) +
             " sigma-space cross-validations";
    return true;
}

// ------------------------------------------------------------- criteria 4..6

const Signal kModelG{{0.5, 0.5}, {-1.0, 1.0}};
const RegularityParams kModelReg{2.0, 0.4, 0.6};

bool amplitude_scaling(std::string& detail) {
    SweepConfig cfg;
    cfg.h_values = {0.4, 0.2, 0.1, 0.05};
    cfg.eps_c = 1e-8;
    cfg.eps_exp = 0.0;
    cfg.mode = SweepMode::Full;
    cfg.budget = 4096;
    cfg.seed = 77;
    const auto [records, summary] = scaling_sweep(kModelG, cfg, kModelReg);
    if (!summary.slope_rho_A || !summary.slope_rho_X) {
        detail = "slopes missing";
        return false;
    }
    std::ostringstream ss;
    ss << "slope rho_A " << summary.slope_rho_A->slope << " (target -3), slope rho_X "
       << summary.slope_rho_X->slope << " (target -2)";
    detail = ss.str();
    return summary.slope_rho_A->slope >= -3.4 && summary.slope_rho_A->slope <= -2.6 &&
           summary.slope_rho_X->slope >= -2.4 && summary.slope_rho_X->slope <= -1.6;
}

bool leaf_scaling(std::string& detail) {
    SweepConfig cfg;
    cfg.h_values = {0.4, 0.2, 0.1, 0.05};
    cfg.eps_c = 1e-8;
    cfg.eps_exp = 0.0;
    cfg.mode = SweepMode::Leaf;
    cfg.q = 2;
    cfg.budget = 4096;
    cfg.seed = 77;
    cfg.leaf.cloud_size = 512;
    const auto [records, summary] = scaling_sweep(kModelG, cfg, kModelReg);
    if (!summary.slope_rho_Sq) {
        detail = "slope missing";
        return false;
    }
    std::ostringstream ss;
    ss << "slope rho_S2 " << summary.slope_rho_Sq->slope << " (target -2)";
    detail = ss.str();
    return summary.slope_rho_Sq->slope >= -2.5 && summary.slope_rho_Sq->slope <= -1.5;
}

bool leaf_convergence(std::string& detail) {
    SweepConfig cfg;
    cfg.h_values = {0.1, 0.05};
    cfg.eps_c = 1.0;
    cfg.eps_exp = 3.0; // eps = h^3, the q = 2 limit regime
    cfg.mode = SweepMode::Leaf;
    cfg.q = 2;
    cfg.budget = 1024;
    cfg.seed = 99;
    cfg.leaf.cloud_size = 4096;
    const auto [records, summary] = scaling_sweep(kModelG, cfg, kModelReg);
    const double ratio = records[0].dist_to_leaf / records[1].dist_to_leaf;
    // section bound c' = C (1+|kappa|)^{2d-1} = 1; corners sit exactly on it
    const double c_prime = 1.0 + 1e-9;
    std::ostringstream ss;
    ss << "distance ratio h=0.1 vs h=0.05: " << ratio << " (target 2), max |m_3| deviation "
       << std::max(records[0].section_dev, records[1].section_dev);
    detail = ss.str();
    return ratio >= 1.4 && ratio <= 2.9 && records[0].section_dev <= c_prime &&
           records[1].section_dev <= c_prime;
}

// ---------------------------------------------------------------- criterion 7

bool model_space_identity(std::string& detail) {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::uniform_real_distribution<double> h_dist(0.05, 0.8);
    std::uniform_real_distribution<double> eps_dist(1e-3, 1.0);
    int checked = 0, agreements = 0;
    while (checked < 500) {
        const double h = h_dist(rng);
        const ModelTransform t{0.0, h};
        const Signal f = apply_transform(t, kModelG, Direction::Inverse);
        Signal gp = kModelG;
        for (double& a : gp.amplitudes) a += jitter(rng);
        gp.nodes[0] += jitter(rng) * 0.5;
        gp.nodes[1] += jitter(rng) * 0.5;
        if (!(gp.nodes[0] < gp.nodes[1])) continue;
        const double eps = eps_dist(rng);
        const Signal fp = apply_transform(t, gp, Direction::Inverse);

        // exclude boundary cases by a 1e-12 margin
        const MomentVector mf = moments(f, 4), mfp = moments(fp, 4);
        const MomentVector mg = moments(kModelG, 4), mgp = moments(gp, 4);
        bool boundary = false;
        double bound = eps;
        for (int k = 0; k < 4; ++k) {
            if (std::abs(std::abs(mfp[static_cast<std::size_t>(k)] -
                                  mf[static_cast<std::size_t>(k)]) -
                         eps) < 1e-12)
                boundary = true;
            if (std::abs(std::abs(mgp[static_cast<std::size_t>(k)] -
                                  mg[static_cast<std::size_t>(k)]) -
                         bound) < 1e-12)
                boundary = true;
            bound /= h;
        }
        if (boundary) continue;
        ++checked;
        if (in_error_set(fp, f, eps) == in_moment_parallelepiped(gp, kModelG, eps, h))
            ++agreements;
    }
    detail = std::to_string(agreements) + "/500 agree";
    return agreements == 500;
}

// ---------------------------------------------------------------- criterion 8

bool polynomial_layer(std::string& detail) {
    std::mt19937_64 rng(888);
    std::uniform_real_distribution<double> pos(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int d = 1 + trial % 10;
        // tuples on the canonical interval; |x|^k growth and near-collisions
        // both inflate the polynomial's root condition number
        std::vector<double> x(static_cast<std::size_t>(d));
        while (true) {
            for (double& v : x) v = pos(rng);
            std::sort(x.begin(), x.end());
            bool ok = true;
            for (int j = 1; j < d; ++j)
                if (x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j - 1)] < 0.05)
                    ok = false;
            if (ok) break;
        }
        const std::vector<double> back = root_mapping(vieta_map(x), 0.0);
        if (back.size() != x.size()) {
            detail = "root count lost in round trip";
            return false;
        }
        for (std::size_t j = 0; j < x.size(); ++j)
            worst = std::max(worst, std::abs(back[j] - x[j]));
    }
    if (worst > 1e-8) {
        detail = "round-trip error " + std::to_string(worst);
        return false;
    }

    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + trial % 6;
        const int real_count =
            static_cast<int>(rng() % static_cast<std::uint64_t>(d / 2 + 1)) * 2 + (d % 2);
        std::vector<double> coeffs{1.0};
        if (real_count > 0) {
            const std::vector<double> roots = oracles::random_nodes(rng, real_count, -2.0, 0.2, 0.5);
            for (double r : roots) {
                coeffs.push_back(0.0);
                for (std::size_t i = coeffs.size() - 1; i >= 1; --i) coeffs[i] -= r * coeffs[i - 1];
            }
        }
        for (int rem = d - real_count; rem > 0; rem -= 2) {
            const double re = unit(rng);
            const double im = 0.25 + std::abs(unit(rng));
            std::vector<double> next(coeffs.size() + 2, 0.0);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i] += coeffs[i];
                next[i + 1] += -2.0 * re * coeffs[i];
                next[i + 2] += (re * re + im * im) * coeffs[i];
            }
            coeffs = std::move(next);
        }
        MonicRealPolynomial q;
        q.sigma.assign(coeffs.begin() + 1, coeffs.end());
        const int sturm = count_distinct_real_roots(q);
        double bound = 1.0;
        for (double s : q.sigma) bound = std::max(bound, 1.0 + std::abs(s));
        const int sweep = oracles::sign_sweep_root_count(q.sigma, bound, 40000);
        if (sturm != real_count || sweep != sturm) {
            std::ostringstream ss;
            ss << "count mismatch at trial " << trial << ": sturm " << sturm << ", sweep " << sweep
               << ", constructed " << real_count;
            detail = ss.str();
            return false;
        }
    }
    std::ostringstream ss;
    ss << "10000 round trips (worst " << worst << "), 1000 Sturm/sweep agreements";
    detail = ss.str();
    return true;
}

// ---------------------------------------------------------------- criterion 9

bool run_cli(const std::string& args, const std::string& env) {
    const std::string cmd = env + " " + g_cli + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str())) == 0;
}

bool determinism(std::string& detail) {
    if (g_cli.empty()) {
        detail = "CLI binary path not provided";
        return false;
    }
    const fs::path dir =
        fs::temp_directory_path() / ("prony_acc_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    const auto file = [&](const std::string& name) { return (dir / name).string(); };

    io::write_text_file(file("solve.json"), R"({"mu":[2,0,2,0],"d":2})");
    io::write_text_file(file("leaf.json"), R"({"mu":[1,0,1],"d":2,"q":2,"grid":201})");
    io::write_text_file(file("es.json"),
                        R"({"signal":{"amplitudes":[0.5,0.5],"nodes":[-1,1]},"eps":0.05})");
    io::write_text_file(file("sc.json"),
                        R"({"signal":{"amplitudes":[0.5,0.5],"nodes":[-1,1]},"eta":2,"m":0.4,"M":0.6})");

    struct Job {
        std::string args;
        std::vector<std::string> outputs;
    };
    const std::vector<Job> jobs{
        {"solve --input " + file("solve.json") + " --output OUT", {"OUT"}},
        {"leaf-sample --input " + file("leaf.json") + " --output OUT",
         {"OUT", "OUT.summary.json"}},
        {"error-set --input " + file("es.json") + " --budget 2048 --seed 5 --format csv "
         "--output OUT",
         {"OUT"}},
        {"scaling --input " + file("sc.json") + " --h 0.4,0.2 --eps-c 1e-8 --budget 512 "
         "--seed 5 --output OUT",
         {"OUT", "OUT.summary.json"}},
        {"scaling --input " + file("sc.json") + " --h 0.2,0.1 --eps-c 1e-8 --budget 64 "
         "--grid 256 --q 2 --seed 5 --output OUT",
         {"OUT", "OUT.summary.json"}},
    };

    bool ok = true;
    int job_index = 0;
    for (const Job& job : jobs) {
        std::vector<std::string> contents[4];
        const std::vector<std::string> envs{"PRONY_THREADS=1", "PRONY_THREADS=1",
                                            "PRONY_THREADS=4", "PRONY_THREADS=4"};
        for (int run = 0; run < 4; ++run) {
            const std::string base = file("job" + std::to_string(job_index) + "_run" +
                                          std::to_string(run) + ".out");
            std::string args = job.args;
            const std::string placeholder = "OUT";
            for (std::size_t pos; (pos = args.find(placeholder)) != std::string::npos;)
                args.replace(pos, placeholder.size(), base);
            if (!run_cli(args, envs[static_cast<std::size_t>(run)])) {
                detail = "CLI run failed: " + job.args;
                fs::remove_all(dir);
                return false;
            }
            for (const std::string& out : job.outputs) {
                std::string path = out;
                const std::size_t pos = path.find(placeholder);
                path.replace(pos, placeholder.size(), base);
                contents[run].push_back(io::read_text_file(path));
            }
        }
        for (int run = 1; run < 4; ++run)
            if (contents[run] != contents[0]) {
                ok = false;
                detail = "outputs differ across runs/thread counts for: " + job.args;
            }
        ++job_index;
    }
    fs::remove_all(dir);
    if (ok) detail = "5 commands, 2 repeats x PRONY_THREADS in {1,4}: byte-identical";
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
    double time_limit_s;
};

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    if (g_cli.empty()) {
        const char* env = std::getenv("PRONY_CLI_BIN");
        if (env != nullptr) g_cli = env;
    }

    const std::vector<Criterion> criteria{
        {1, "round-trip inversion, 1000 random signals d<=6", round_trip_inversion, 10.0},
        {2, "Vieta equivalence oracle (both directions), d in {2,3}", vieta_equivalence, 30.0},
        {3, "two-node classification vs case table + sigma-space signs", two_node_classification,
         5.0},
        {4, "amplitude/node error scaling in h (targets -3, -2)", amplitude_scaling, 60.0},
        {5, "leaf reconstruction error scaling in h (target -2)", leaf_scaling, 120.0},
        {6, "error-set convergence to the leaf at eps = h^3", leaf_convergence, 60.0},
        {7, "kappa=0 error-set/parallelepiped identity, 500 signals", model_space_identity, 5.0},
        {8, "polynomial layer: root round trips + Sturm counts", polynomial_layer, 10.0},
        {9, "CLI byte-determinism across runs and thread counts", determinism, 600.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.time_limit_s) {
            ok = false;
            detail += " [over time limit]";
        }
        std::printf("%s  [%d] %s (%.2fs) %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    detail.empty() ? "" : ("- " + detail).c_str());
        if (!ok) ++failures;
    }
    return failures;
}
