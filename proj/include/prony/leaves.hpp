#ifndef PRONY_LEAVES_HPP
#define PRONY_LEAVES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "prony/exec.hpp"
#include "prony/linalg.hpp"
#include "prony/polynomial.hpp"
#include "prony/signal.hpp"

namespace prony {

// A leaf is the set of signals matching the first q+1 moments mu_0..mu_q.
struct LeafSpec {
    MomentVector mu;
    int d = 0;
    int q = 0;
};

// Throws std::invalid_argument unless mu has q+1 entries and 0 <= q <= 2d-1.
void validate(const LeafSpec& spec);

struct LeafPoint {
    std::vector<double> params; // sampler coordinates of this point
    Signal signal;
    double residual = 0.0; // max_{k<=q} |m_k(signal) - mu_k|
    bool near_boundary = false;
};

struct LeafPointCloud {
    int q = 0;
    std::vector<LeafPoint> points;
    std::optional<double> section_bound;
    std::size_t skipped = 0; // parameter tuples rejected during sampling
};

// Uniform inclusive grid on [lo, hi]; count == 1 degenerates to {lo}.
struct GridSpec {
    double lo = -1.0;
    double hi = 1.0;
    int count = 1;

    double value(int i) const {
        return count > 1 ? lo + (hi - lo) * static_cast<double>(i) / (count - 1) : lo;
    }
};

struct LowQSampleConfig {
    GridSpec node_grid;
    GridSpec amp_grid;
    double min_gap = 1e-6; // node tuples with a smaller gap are skipped
};

// Samples S_q(mu) for q <= d-1 over all strictly increasing node tuples from
// the node grid crossed with free-amplitude tuples; the leading q+1
// amplitudes are solved per tuple. Point params are the leaf coordinates
// (x_1..x_d, a_{q+2}..a_d); rows come out sorted by them.
LeafPointCloud sample_leaf_low_q(const LeafSpec& spec, const LowQSampleConfig& cfg,
                                 Exec exec = Exec::Parallel);

// The affine sigma-space set L_q(mu) behind the projection S^X_q(mu); the
// leaf is recovered by intersecting with the hyperbolic set and applying the
// root mapping.
struct LeafProjection {
    LeafSpec spec;
    AffineSolutionSet set;
};

LeafProjection leaf_projection_high_q(const LeafSpec& spec, double rank_tol = 1e-10);

struct LeafSamplerConfig {
    double box = 3.0;  // parameter box [-box, box]^dim
    int grid = 33;     // grid points per axis; 0 switches to Halton sampling
    int budget = 512;  // Halton point count when grid == 0
    std::uint64_t seed = 0;
    double gap_tol = kDefaultGapTol;
    double residual_tol_factor = 1e-8;
    std::optional<Signal> ball_center; // optional Euclidean ball filter
    double ball_radius = std::numeric_limits<double>::infinity();
};

// Draws parameter vectors t, filters sigma = particular + sum t_i basis_i by
// hyperbolicity and maps survivors through the root mapping; amplitudes are
// completed from the first d moments. Near-multiple-root points are kept and
// flagged instead of dropped, so collision neighborhoods stay visible.
// Throws std::domain_error when the projection is EMPTY.
LeafPointCloud sample_leaf_projection(const LeafProjection& proj, const LeafSamplerConfig& cfg,
                                      Exec exec = Exec::Parallel);

// Unique signal over nodes X on the projection of S_q(mu), q >= d.
// Amplitudes come from the leading d x d Vandermonde block; the remaining
// moment equations then hold automatically on the leaf, which is verified.
// Throws std::domain_error when the residual shows X is off the leaf.
Signal complete_leaf_point(const std::vector<double>& nodes, const LeafSpec& spec,
                           double residual_tol_factor = 1e-8);

enum class TwoNodeCurveKind {
    NonsingularHyperbola,
    DegenerateLines,
    StraightLine,
    Empty,
    WholePlane,
};

std::string to_string(TwoNodeCurveKind kind);

// Classification of the node-space curve S^X_2(mu) for d = 2.
//   NonsingularHyperbola: (x1 - c)(x2 - c) = rhs, params {c, rhs}
//   DegenerateLines:      two axis-parallel lines crossing at params {c}
//   StraightLine:         x1 + x2 = params {s}
struct TwoNodeCurveClass {
    TwoNodeCurveKind kind;
    std::vector<double> params;
};

TwoNodeCurveClass classify_two_node_curve(const MomentVector& mu, double zero_tol = 1e-12);

// Retains points whose next moment m_{q+1} stays within c of the reference's.
LeafPointCloud leaf_section_filter(const LeafPointCloud& cloud, const Signal& reference, double c);

} // namespace prony

#endif
