#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rlmc/leverage.hpp"
#include "rlmc/recovery.hpp"
#include "rlmc/solver.hpp"

using namespace rlmc;
using test_helpers::random_dense;
using test_helpers::random_low_rank;

namespace {

// Independent oracle for the 2x2 one-missing-entry problem: nuclear norm of
// [[a,b],[c,t]] in closed form, (s1+s2)^2 = ||A||_F^2 + 2|det|.
double nuclear_2x2(double a, double b, double c, double t) {
    const double f = a * a + b * b + c * c + t * t;
    const double det = a * t - b * c;
    return std::sqrt(f + 2.0 * std::abs(det));
}

double grid_minimizer_2x2(double a, double b, double c) {
    double best_t = -10.0, best = std::numeric_limits<double>::infinity();
    for (double t = -10.0; t <= 10.0; t += 1e-4) {
        const double v = nuclear_2x2(a, b, c, t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    // refine around the best grid point
    double lo = best_t - 1e-4, hi = best_t + 1e-4;
    for (int it = 0; it < 60; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (nuclear_2x2(a, b, c, m1) < nuclear_2x2(a, b, c, m2)) hi = m2;
        else lo = m1;
    }
    return (lo + hi) / 2.0;
}

}  // namespace

TEST_CASE("svt_prox: identity, annihilation, diagonal shrinkage") {
    const Matrix x = random_dense(5, 4, 1);
    CHECK((svt_prox(x, 0.0) - x).norm() == 0.0);

    const double sigma1 = svd_full(x).sigma(0);
    CHECK(svt_prox(x, sigma1 + 1.0).norm() == 0.0);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    Matrix shrunk = svt_prox(d, 2.0);
    CHECK(shrunk(0, 0) == doctest::Approx(1.0));
    CHECK(shrunk(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(svt_prox(d, -1.0), std::invalid_argument);
}

TEST_CASE("svt_prox: prox inequality against random candidates") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        const Matrix x = random_dense(6, 5, 10 + s);
        const double tau = 0.3 + 0.4 * static_cast<double>(s);
        const Matrix y = svt_prox(x, tau);
        const double fy = 0.5 * (y - x).squaredNorm() + tau * svd_full(y).sigma.sum();
        for (int k = 0; k < 25; ++k) {
            const Matrix z = random_dense(6, 5, 1000 + 100 * s + k);
            const double fz = 0.5 * (z - x).squaredNorm() + tau * svd_full(z).sigma.sum();
            CHECK(fy <= fz + 1e-9);
        }
    }
}

TEST_CASE("complete: full observation returns the matrix in one step") {
    const Matrix m = random_low_rank(6, 5, 2, 2);
    SampleSet s = draw_bernoulli(m, Matrix::Ones(6, 5), 7);
    RecoveryReport r = complete(s);
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    CHECK((r.solution - m).norm() == 0.0);
    CHECK(r.objective == doctest::Approx(svd_full(m).sigma.sum()).epsilon(1e-10));
    CHECK(r.constraint_residual == 0.0);
}

TEST_CASE("complete: single missing entry matches the 1-D oracle") {
    // M = [[1,2],[2,4]] with the (2,2) entry hidden.
    Matrix m(2, 2);
    m << 1, 2, 2, 4;
    SampleSet s = sample_from_indices(m, {{0, 0}, {0, 1}, {1, 0}}, 0);
    RecoveryReport r = complete(s);
    const double oracle = grid_minimizer_2x2(1, 2, 2);
    CHECK(std::abs(r.solution(1, 1) - oracle) < 1e-3);
    CHECK(r.converged);
}

TEST_CASE("complete: empty sample and non-convergence reporting") {
    Matrix m = Matrix::Ones(3, 3);
    SampleSet empty;
    empty.rows = 3;
    empty.cols = 3;
    empty.probabilities = Matrix::Ones(3, 3);
    CHECK_THROWS_AS(complete(empty), std::invalid_argument);

    // Far too few iterations: must report converged = false, not throw.
    const Matrix big = random_low_rank(20, 15, 3, 3);
    SampleSet s = draw_bernoulli(big, Matrix::Constant(20, 15, 0.8), 1);
    SolverConfig cfg;
    cfg.max_iterations = 2;
    RecoveryReport r = complete(s, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 2);
}

TEST_CASE("complete: end-to-end recovery on generous relaxed sampling") {
    const Matrix m = random_low_rank(60, 50, 3, 4);
    RankFactorization f = truncated_svd(m, 3);
    Matrix probs = entry_probabilities(leverage_scores(f), ProbabilityScheme::relaxed(6.0));
    int hits = 0;
    for (int t = 0; t < 10; ++t) {
        SampleSet s = draw_bernoulli(m, probs, rng::derive(99, t));
        RecoveryReport r = complete(s);
        if ((r.solution - m).norm() / m.norm() < 1e-3) ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("complete: iterate displacement is monotone and the objective settles") {
    for (std::uint64_t seed : {3, 7, 11, 13}) {
        const Matrix m = random_low_rank(24, 20, 2, 5);
        SampleSet s = draw_bernoulli(m, Matrix::Constant(24, 20, 0.7), seed);
        std::vector<IterTrace> trail;
        SolverConfig cfg;
        cfg.penalty_adapt = false;  // displacement monotonicity needs a fixed penalty
        cfg.max_iterations = 4000;
        cfg.trace = [&](const IterTrace& t) { trail.push_back(t); };
        RecoveryReport r = complete(s, cfg);
        REQUIRE(r.converged);
        double running_min = std::numeric_limits<double>::infinity();
        for (std::size_t k = 10; k + 1 < trail.size(); ++k) {
            CHECK(trail[k + 1].displacement <= trail[k].displacement + 1e-9);
            running_min = std::min(running_min, trail[k].objective);
        }
        // The oscillation dies out: the final objective sits at the trail minimum.
        CHECK(trail.back().objective <= running_min + 1e-3 * (1.0 + running_min));
    }
}

TEST_CASE("complete: feasibility at output") {
    const Matrix m = random_low_rank(30, 25, 2, 6);
    SampleSet s = draw_bernoulli(m, Matrix::Constant(30, 25, 0.75), 4);
    RecoveryReport r = complete(s);
    if (r.converged) CHECK(r.constraint_residual <= 1e-7);
}

TEST_CASE("complete: solutions from different starts coincide on verified instances") {
    const Matrix m = random_low_rank(20, 16, 2, 7);
    SampleSet s = draw_bernoulli(m, Matrix::Constant(20, 16, 0.85), 5);
    RecoveryReport a = complete(s);

    SolverConfig warm;
    warm.init = random_dense(20, 16, 8);
    RecoveryReport b = complete(s, warm);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK((a.solution - b.solution).norm() < 1e-4);
}
