#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "prony/linalg.hpp"

using namespace prony;

namespace {
MomentVector mv(std::vector<double> values) { return MomentVector{std::move(values)}; }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
} // namespace

TEST_CASE("vandermonde_amplitudes: worked examples") {
    {
        const std::vector<double> a = vandermonde_amplitudes({-1.0, 1.0}, mv({1.0, 0.0}));
        REQUIRE(a.size() == 2);
        CHECK(a[0] == doctest::Approx(0.5));
        CHECK(a[1] == doctest::Approx(0.5));
    }
    {
        const std::vector<double> a = vandermonde_amplitudes({3.0}, mv({2.0}));
        REQUIRE(a.size() == 1);
        CHECK(a[0] == 2.0);
    }
    {
        const std::vector<double> a = vandermonde_amplitudes({0.0, 1.0, 2.0}, mv({3.0, 3.0, 5.0}));
        REQUIRE(a.size() == 3);
        CHECK(a[0] == doctest::Approx(1.0));
        CHECK(a[1] == doctest::Approx(1.0));
        CHECK(a[2] == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(vandermonde_amplitudes({0.0, 1e-13}, mv({1.0, 0.0})), std::domain_error);
    CHECK_THROWS_AS(vandermonde_amplitudes({0.0, 1.0}, mv({1.0})), std::invalid_argument);
}

TEST_CASE("vandermonde_amplitudes: agrees with dense elimination and round-trips moments") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 8);
        const std::vector<double> x = oracles::random_nodes(rng, d, -2.0, 0.1, 0.5);
        const std::vector<double> a_true = oracles::random_amplitudes(rng, d, 0.1, 10.0);
        const std::vector<double> mu = oracles::naive_moments(a_true, x, d);

        const std::vector<double> a = vandermonde_amplitudes(x, mv(mu));
        const std::vector<double> dense = oracles::dense_vandermonde_solve(x, mu);
        REQUIRE_FALSE(dense.empty());
        double scale = 0.0;
        for (double v : a_true) scale = std::max(scale, std::abs(v));
        for (int j = 0; j < d; ++j) {
            CHECK(std::abs(a[static_cast<std::size_t>(j)] - a_true[static_cast<std::size_t>(j)]) <=
                  1e-9 * (1.0 + scale));
            CHECK(std::abs(a[static_cast<std::size_t>(j)] - dense[static_cast<std::size_t>(j)]) <=
                  1e-8 * (1.0 + scale));
        }

        // moments of the recovered amplitudes reproduce mu to 1e-9 relative
        const std::vector<double> mu_back = oracles::naive_moments(a, x, d);
        for (int k = 0; k < d; ++k)
            CHECK(std::abs(mu_back[static_cast<std::size_t>(k)] - mu[static_cast<std::size_t>(k)]) <=
                  1e-9 * (1.0 + std::abs(mu[static_cast<std::size_t>(k)])));
    }
}

TEST_CASE("leaf_amplitudes_low_q: worked examples") {
    {
        const std::vector<double> a = leaf_amplitudes_low_q(mv({1.0, 0.0}), {-1.0, 1.0}, {});
        CHECK(a[0] == doctest::Approx(0.5));
        CHECK(a[1] == doctest::Approx(0.5));
    }
    {
        const std::vector<double> a =
            leaf_amplitudes_low_q(mv({1.0}), {-1.0, 0.0, 1.0}, {0.3, 0.2});
        CHECK(a[0] == doctest::Approx(0.5)); // mass balance
        CHECK(a[1] == 0.3);
        CHECK(a[2] == 0.2);
    }
    {
        const std::vector<double> a = leaf_amplitudes_low_q(mv({0.0, 1.0}), {0.0, 2.0}, {});
        CHECK(a[0] == doctest::Approx(-0.5));
        CHECK(a[1] == doctest::Approx(0.5));
    }
    CHECK_THROWS_AS(leaf_amplitudes_low_q(mv({1.0, 0.0}), {-1.0, 1.0}, {0.1}),
                    std::invalid_argument);
}

TEST_CASE("leaf_amplitudes_low_q: q = d-1 coincides with vandermonde_amplitudes") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 6);
        const std::vector<double> x = oracles::random_nodes(rng, d, -2.0, 0.1, 0.5);
        const std::vector<double> mu =
            oracles::naive_moments(oracles::random_amplitudes(rng, d, 0.1, 5.0), x, d);
        const std::vector<double> a = vandermonde_amplitudes(x, mv(mu));
        const std::vector<double> b = leaf_amplitudes_low_q(mv(mu), x, {});
        for (int j = 0; j < d; ++j)
            CHECK(std::abs(a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)]) <=
                  1e-12 * std::max(1.0, std::abs(a[static_cast<std::size_t>(j)])));
    }
}

TEST_CASE("leaf_amplitudes_low_q: solved head satisfies the first q+1 equations") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> muval(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 5);
        const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        const std::vector<double> x = oracles::random_nodes(rng, d, -2.0, 0.1, 0.5);
        std::vector<double> mu(static_cast<std::size_t>(q + 1));
        for (double& v : mu) v = muval(rng);
        const std::vector<double> free =
            oracles::random_amplitudes(rng, d - q - 1, 0.1, 2.0);
        const std::vector<double> a = leaf_amplitudes_low_q(mv(mu), x, free);
        const std::vector<double> back = oracles::naive_moments(a, x, q + 1);
        double norm = 0.0;
        for (double v : mu) norm = std::max(norm, std::abs(v));
        for (int k = 0; k <= q; ++k)
            CHECK(std::abs(back[static_cast<std::size_t>(k)] - mu[static_cast<std::size_t>(k)]) <=
                  1e-9 * (1.0 + norm));
    }
}

TEST_CASE("hankel_solution_set: worked examples") {
    {
        // single row 0*s1 + 1*s2 = -1
        const AffineSolutionSet set = hankel_solution_set(mv({1.0, 0.0, 1.0}), 2);
        REQUIRE_FALSE(set.empty());
        CHECK(set.dimension() == 1);
        CHECK(set.rank == 1);
        const std::vector<double>& p = *set.particular;
        CHECK(std::abs(p[0]) <= 1e-12);
        CHECK(p[1] == doctest::Approx(-1.0));
        REQUIRE(set.basis.size() == 1);
        CHECK(set.basis[0][0] == doctest::Approx(1.0));
        CHECK(std::abs(set.basis[0][1]) <= 1e-12);
    }
    {
        const AffineSolutionSet set = hankel_solution_set(mv({2.0, 0.0, 2.0, 0.0}), 2);
        REQUIRE_FALSE(set.empty());
        CHECK(set.dimension() == 0);
        const std::vector<double>& p = *set.particular;
        CHECK(std::abs(p[0]) <= 1e-12);
        CHECK(p[1] == doctest::Approx(-1.0));
    }
    {
        const AffineSolutionSet set = hankel_solution_set(mv({0.0, 0.0, 0.0, 1.0}), 2);
        CHECK(set.empty());
        CHECK(set.dimension() == -1);
    }
    CHECK_THROWS_AS(hankel_solution_set(mv({1.0, 2.0}), 2), std::invalid_argument);
}

TEST_CASE("hankel_solution_set: sampled points satisfy the rows; dimension is d - rank") {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> tval(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 5);
        const int q = d + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        const prony::Signal f = oracles::random_signal(rng, d);
        const std::vector<double> mu = oracles::naive_moments(f.amplitudes, f.nodes, q + 1);
        const AffineSolutionSet set = hankel_solution_set(mv(mu), d);
        REQUIRE_FALSE(set.empty());
        CHECK(set.dimension() == d - set.rank);
        // generic case: dimension = 2d - q - 1
        CHECK(set.dimension() == 2 * d - q - 1);

        double norm = 0.0;
        for (double v : mu) norm = std::max(norm, std::abs(v));
        for (int probe = 0; probe < 5; ++probe) {
            std::vector<double> t(static_cast<std::size_t>(set.dimension()));
            for (double& v : t) v = tval(rng);
            const std::vector<double> sigma = set.point(t);
            CHECK(hankel_row_residual(mv(mu), d, sigma) <= 1e-8 * (1.0 + norm));
        }
    }
}

TEST_CASE("hankel_solution_set: basis is orthonormal with positive leading entries") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 4);
        const int q = d + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        const prony::Signal f = oracles::random_signal(rng, d);
        const std::vector<double> mu = oracles::naive_moments(f.amplitudes, f.nodes, q + 1);
        const AffineSolutionSet set = hankel_solution_set(mv(mu), d);
        for (std::size_t i = 0; i < set.basis.size(); ++i) {
            CHECK(std::abs(dot(set.basis[i], set.basis[i]) - 1.0) <= 1e-10);
            for (std::size_t j = i + 1; j < set.basis.size(); ++j)
                CHECK(std::abs(dot(set.basis[i], set.basis[j])) <= 1e-10);
            for (double v : set.basis[i]) {
                if (std::abs(v) > 1e-12) {
                    CHECK(v > 0.0);
                    break;
                }
            }
        }
    }
}

TEST_CASE("hankel_solution_set: all-zero system spans the whole space") {
    const AffineSolutionSet set = hankel_solution_set(mv({0.0, 0.0, 0.0, 0.0}), 2);
    REQUIRE_FALSE(set.empty());
    CHECK(set.dimension() == 2);
    CHECK(set.rank == 0);
}
