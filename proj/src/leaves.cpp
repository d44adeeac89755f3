#include "prony/leaves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prony {

void validate(const LeafSpec& spec) {
    if (spec.d < 1) throw std::invalid_argument("leaf spec: d must be >= 1");
    if (spec.q < 0 || spec.q > 2 * spec.d - 1)
        throw std::invalid_argument("leaf spec: q must lie in 0..2d-1");
    if (static_cast<int>(spec.mu.size()) != spec.q + 1)
        throw std::invalid_argument("leaf spec: mu must have q+1 values");
    validate(spec.mu);
}

namespace {

double mu_scale(const MomentVector& mu) {
    double m = 0.0;
    for (double v : mu.values) m = std::max(m, std::abs(v));
    return 1.0 + m;
}

double leaf_residual(const Signal& s, const MomentVector& mu) {
    const MomentVector got = moments(s, static_cast<int>(mu.size()));
    double worst = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k)
        worst = std::max(worst, std::abs(got[k] - mu[k]));
    return worst;
}

double min_gap(const std::vector<double>& sorted) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < sorted.size(); ++j) g = std::min(g, sorted[j] - sorted[j - 1]);
    return g;
}

void sort_by_params(std::vector<LeafPoint>& points) {
    std::sort(points.begin(), points.end(), [](const LeafPoint& a, const LeafPoint& b) {
        return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(),
                                            b.params.end());
    });
}

// Halton radical-inverse in the given prime base.
double halton(std::uint64_t index, unsigned base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

} // namespace

LeafPointCloud sample_leaf_low_q(const LeafSpec& spec, const LowQSampleConfig& cfg, Exec exec) {
    validate(spec);
    if (spec.q > spec.d - 1)
        throw std::invalid_argument("sample_leaf_low_q: requires q <= d-1");
    const int d = spec.d;
    const int n_free = d - spec.q - 1;
    if (n_free > 0 && cfg.amp_grid.count < 1)
        throw std::invalid_argument("sample_leaf_low_q: amplitude grid needs at least one point");

    // strictly increasing node tuples off the grid, gaps >= min_gap
    std::vector<std::vector<double>> node_tuples;
    std::size_t skipped = 0;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < d; ++j) idx[static_cast<std::size_t>(j)] = j;
    if (cfg.node_grid.count >= d) {
        while (true) {
            std::vector<double> tuple(static_cast<std::size_t>(d));
            bool ok = true;
            for (int j = 0; j < d; ++j) {
                tuple[static_cast<std::size_t>(j)] = cfg.node_grid.value(idx[static_cast<std::size_t>(j)]);
                if (j > 0 && tuple[static_cast<std::size_t>(j)] -
                                     tuple[static_cast<std::size_t>(j - 1)] <
                                 cfg.min_gap)
                    ok = false;
            }
            if (ok)
                node_tuples.push_back(std::move(tuple));
            else
                ++skipped;
            // next index combination i_1 < ... < i_d
            int j = d - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == cfg.node_grid.count - d + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int l = j + 1; l < d; ++l)
                idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
        }
    }

    std::size_t n_amp = 1;
    for (int i = 0; i < n_free; ++i) n_amp *= static_cast<std::size_t>(cfg.amp_grid.count);

    const std::size_t total = node_tuples.size() * n_amp;
    std::vector<LeafPoint> slots(total);
    std::vector<char> keep(total, 0);
    const double scale = mu_scale(spec.mu);

    for_each_index(total, exec, [&](std::size_t i) {
        const std::size_t node_i = i / n_amp;
        std::size_t amp_i = i % n_amp;
        std::vector<double> free_amps(static_cast<std::size_t>(n_free));
        for (int f = n_free - 1; f >= 0; --f) {
            free_amps[static_cast<std::size_t>(f)] =
                cfg.amp_grid.value(static_cast<int>(amp_i % static_cast<std::size_t>(cfg.amp_grid.count)));
            amp_i /= static_cast<std::size_t>(cfg.amp_grid.count);
        }
        const std::vector<double>& nodes = node_tuples[node_i];
        LeafPoint pt;
        pt.signal.nodes = nodes;
        pt.signal.amplitudes = leaf_amplitudes_low_q(spec.mu, nodes, free_amps, cfg.min_gap * 0.5);
        pt.residual = leaf_residual(pt.signal, spec.mu);
        pt.near_boundary = min_gap(nodes) < 100.0 * kDefaultGapTol;
        pt.params = nodes;
        pt.params.insert(pt.params.end(), free_amps.begin(), free_amps.end());
        if (pt.near_boundary || pt.residual <= 1e-8 * scale) {
            slots[i] = std::move(pt);
            keep[i] = 1;
        }
    });

    LeafPointCloud cloud;
    cloud.q = spec.q;
    cloud.skipped = skipped;
    for (std::size_t i = 0; i < total; ++i) {
        if (keep[i])
            cloud.points.push_back(std::move(slots[i]));
        else
            ++cloud.skipped;
    }
    sort_by_params(cloud.points);
    return cloud;
}

LeafProjection leaf_projection_high_q(const LeafSpec& spec, double rank_tol) {
    validate(spec);
    if (spec.q < spec.d)
        throw std::invalid_argument("leaf_projection_high_q: requires q >= d");
    return LeafProjection{spec, hankel_solution_set(spec.mu, spec.d, rank_tol)};
}

LeafPointCloud sample_leaf_projection(const LeafProjection& proj, const LeafSamplerConfig& cfg,
                                      Exec exec) {
    if (proj.set.empty())
        throw std::domain_error("sample_leaf_projection: empty solution set");
    const int d = proj.spec.d;
    const int dim = proj.set.dimension();

    // parameter tuples, lexicographic
    std::vector<std::vector<double>> tuples;
    if (dim == 0) {
        tuples.push_back({});
    } else if (cfg.grid > 0) {
        const std::size_t total = [&] {
            std::size_t t = 1;
            for (int i = 0; i < dim; ++i) t *= static_cast<std::size_t>(cfg.grid);
            return t;
        }();
        tuples.reserve(total);
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::vector<double> t(static_cast<std::size_t>(dim));
            std::size_t rem = flat;
            for (int a = dim - 1; a >= 0; --a) {
                const int gi = static_cast<int>(rem % static_cast<std::size_t>(cfg.grid));
                rem /= static_cast<std::size_t>(cfg.grid);
                t[static_cast<std::size_t>(a)] =
                    GridSpec{-cfg.box, cfg.box, cfg.grid}.value(gi);
            }
            tuples.push_back(std::move(t));
        }
    } else {
        const std::uint64_t offset = 1 + cfg.seed % 1000003ULL;
        for (int i = 0; i < cfg.budget; ++i) {
            std::vector<double> t(static_cast<std::size_t>(dim));
            for (int a = 0; a < dim; ++a)
                t[static_cast<std::size_t>(a)] =
                    cfg.box * (2.0 * halton(static_cast<std::uint64_t>(i) + offset,
                                            kPrimes[static_cast<std::size_t>(a) % 16]) -
                               1.0);
            tuples.push_back(std::move(t));
        }
    }

    const double scale = mu_scale(proj.spec.mu);
    MomentVector head;
    head.values.assign(proj.spec.mu.values.begin(), proj.spec.mu.values.begin() + d);

    std::vector<LeafPoint> slots(tuples.size());
    std::vector<char> keep(tuples.size(), 0);
    for_each_index(tuples.size(), exec, [&](std::size_t i) {
        MonicRealPolynomial poly;
        poly.sigma = proj.set.point(tuples[i]);
        if (count_distinct_real_roots(poly) != d) return;
        const std::vector<double> roots = real_roots(poly);
        if (static_cast<int>(roots.size()) != d) return;
        const double gap = d > 1 ? min_gap(roots) : std::numeric_limits<double>::infinity();
        if (!(gap > cfg.gap_tol)) return;
        LeafPoint pt;
        pt.params = tuples[i];
        pt.signal.nodes = roots;
        pt.signal.amplitudes = vandermonde_amplitudes(roots, head, cfg.gap_tol * 0.5);
        pt.residual = leaf_residual(pt.signal, proj.spec.mu);
        pt.near_boundary = gap < 100.0 * cfg.gap_tol;
        if (cfg.ball_center.has_value() &&
            signal_distance(pt.signal, *cfg.ball_center) > cfg.ball_radius)
            return;
        if (!pt.near_boundary && pt.residual > cfg.residual_tol_factor * scale) return;
        slots[i] = std::move(pt);
        keep[i] = 1;
    });

    LeafPointCloud cloud;
    cloud.q = proj.spec.q;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (keep[i])
            cloud.points.push_back(std::move(slots[i]));
        else
            ++cloud.skipped;
    }
    sort_by_params(cloud.points);
    return cloud;
}

Signal complete_leaf_point(const std::vector<double>& nodes, const LeafSpec& spec,
                           double residual_tol_factor) {
    validate(spec);
    if (spec.q < spec.d)
        throw std::invalid_argument("complete_leaf_point: requires q >= d");
    MomentVector head;
    head.values.assign(spec.mu.values.begin(), spec.mu.values.begin() + spec.d);
    Signal s;
    s.nodes = nodes;
    s.amplitudes = vandermonde_amplitudes(nodes, head);
    const double res = leaf_residual(s, spec.mu);
    if (res > residual_tol_factor * mu_scale(spec.mu))
        throw std::domain_error("complete_leaf_point: nodes are not on the leaf projection");
    return s;
}

std::string to_string(TwoNodeCurveKind kind) {
    switch (kind) {
        case TwoNodeCurveKind::NonsingularHyperbola: return "NONSINGULAR_HYPERBOLA";
        case TwoNodeCurveKind::DegenerateLines: return "DEGENERATE_LINES";
        case TwoNodeCurveKind::StraightLine: return "STRAIGHT_LINE";
        case TwoNodeCurveKind::Empty: return "EMPTY";
        case TwoNodeCurveKind::WholePlane: return "WHOLE_PLANE";
    }
    return "UNKNOWN";
}

TwoNodeCurveClass classify_two_node_curve(const MomentVector& mu, double zero_tol) {
    if (mu.size() != 3)
        throw std::invalid_argument("classify_two_node_curve: needs mu_0, mu_1, mu_2");
    const double mu0 = mu[0], mu1 = mu[1], mu2 = mu[2];
    if (std::abs(mu0) > zero_tol) {
        const double center = mu1 / mu0;
        const double disc = mu0 * mu2 - mu1 * mu1;
        if (std::abs(disc) <= zero_tol) return {TwoNodeCurveKind::DegenerateLines, {center}};
        // (x1 - c)(x2 - c) = rhs; rhs > 0 means the curve crosses the diagonal
        const double rhs = -disc / (mu0 * mu0);
        return {TwoNodeCurveKind::NonsingularHyperbola, {center, rhs}};
    }
    if (std::abs(mu1) > zero_tol) return {TwoNodeCurveKind::StraightLine, {mu2 / mu1}};
    if (std::abs(mu2) > zero_tol) return {TwoNodeCurveKind::Empty, {}};
    return {TwoNodeCurveKind::WholePlane, {}};
}

LeafPointCloud leaf_section_filter(const LeafPointCloud& cloud, const Signal& reference,
                                   double c) {
    if (!(c > 0.0)) throw std::invalid_argument("leaf_section_filter: c must be positive");
    const int next = cloud.q + 1;
    const double ref_next = moments(reference, next + 1)[static_cast<std::size_t>(next)];
    LeafPointCloud out;
    out.q = cloud.q;
    out.skipped = cloud.skipped;
    out.section_bound = c;
    for (const LeafPoint& pt : cloud.points) {
        const double m_next = moments(pt.signal, next + 1)[static_cast<std::size_t>(next)];
        if (std::abs(m_next - ref_next) <= c) out.points.push_back(pt);
    }
    return out;
}

} // namespace prony
