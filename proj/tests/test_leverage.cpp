#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "rlmc/kernels.hpp"
#include "rlmc/leverage.hpp"
#include "rlmc/svd.hpp"

using namespace rlmc;
using test_helpers::random_low_rank;

TEST_CASE("leverage_scores: identity and basis outer product") {
    LeverageProfile id = leverage_scores(truncated_svd(Matrix::Identity(3, 3), 3));
    for (Index i = 0; i < 3; ++i) CHECK(id.row_scores(i) == doctest::Approx(1.0));
    for (Index j = 0; j < 3; ++j) CHECK(id.col_scores(j) == doctest::Approx(1.0));

    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    LeverageProfile e1 = leverage_scores(truncated_svd(m, 1));
    CHECK(e1.row_scores(0) == doctest::Approx(4.0));
    CHECK(e1.col_scores(0) == doctest::Approx(4.0));
    for (Index i = 1; i < 4; ++i) {
        CHECK(e1.row_scores(i) == doctest::Approx(0.0));
        CHECK(e1.col_scores(i) == doctest::Approx(0.0));
    }
}

TEST_CASE("leverage_scores: masses sum to the rank") {
    LeverageProfile p = leverage_scores(truncated_svd(random_low_rank(6, 5, 2, 21), 2));
    double row_sum = 0.0, col_sum = 0.0;
    for (Index i = 0; i < 6; ++i) row_sum += p.row_mass(i);
    for (Index j = 0; j < 5; ++j) col_sum += p.col_mass(j);
    CHECK(std::abs(row_sum - 2.0) < 1e-8);
    CHECK(std::abs(col_sum - 2.0) < 1e-8);
}

TEST_CASE("relaxed_score: arithmetic and the sum identity") {
    LeverageProfile p;
    p.rank = 1;
    p.rows = 2;
    p.cols = 2;
    p.row_scores = Vector::Constant(2, 2.0);  // masses 1
    p.col_scores = Vector::Constant(2, 2.0);
    CHECK(relaxed_score(p, 0, 0) == doctest::Approx(1.0));

    p.row_scores = Vector::Constant(2, 1.0);  // masses 0.5
    p.col_scores = Vector::Constant(2, 1.0);
    CHECK(relaxed_score(p, 0, 0) == doctest::Approx(0.75));
    CHECK_THROWS_AS(relaxed_score(p, 2, 0), std::invalid_argument);

    // Identity: sum_ij L_ij = (m+n)r - r^2 (equals 9 for I_3).
    LeverageProfile id = leverage_scores(truncated_svd(Matrix::Identity(3, 3), 3));
    double sum = 0.0;
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) sum += relaxed_score(id, i, j);
    CHECK(sum == doctest::Approx(9.0));
}

TEST_CASE("relaxed score sum identity on random profiles") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Index m = 5 + static_cast<Index>(s), n = 4 + static_cast<Index>(s % 3);
        const Index r = 1 + static_cast<Index>(s % 3);
        LeverageProfile p = leverage_scores(truncated_svd(random_low_rank(m, n, r, 40 + s), r));
        double sum = 0.0;
        for (Index i = 0; i < m; ++i)
            for (Index j = 0; j < n; ++j) sum += relaxed_score(p, i, j);
        const double expect = static_cast<double>((m + n) * r - r * r);
        CHECK(std::abs(sum - expect) / expect < 1e-6);
    }
}

TEST_CASE("entry_probabilities: cap, floor, and the log factor") {
    // Saturated profile: L = 1 everywhere.
    LeverageProfile sat;
    sat.rank = 1;
    sat.rows = 2;
    sat.cols = 2;
    sat.row_scores = Vector::Constant(2, 2.0);
    sat.col_scores = Vector::Constant(2, 2.0);
    Matrix capped = entry_probabilities(sat, ProbabilityScheme::relaxed(1.0, true));
    CHECK(capped.minCoeff() == doctest::Approx(1.0));

    // Zero profile hits the floor: (mn)^-5 = 100^-5 = 1e-10 on 10x10.
    LeverageProfile zero;
    zero.rank = 1;
    zero.rows = 10;
    zero.cols = 10;
    zero.row_scores = Vector::Zero(10);
    zero.col_scores = Vector::Zero(10);
    Matrix floored = entry_probabilities(zero, ProbabilityScheme::theorem(1.0, 10, 10));
    CHECK(floored.maxCoeff() == doctest::Approx(1e-10));
    CHECK(floored.minCoeff() == doctest::Approx(1e-10));

    // Hand arithmetic: p = 0.01 * ln(100)^2 with m + n = 100.
    LeverageProfile p;
    p.rank = 1;
    p.rows = 50;
    p.cols = 50;
    p.row_scores = Vector::Constant(50, 0.25);   // mass 0.005
    p.col_scores = Vector::Constant(50, 0.2512562814070352);  // mass ~0.0050251...
    // Masses chosen so L = x + y - xy = 0.01.
    const double x = p.row_mass(0), y = p.col_mass(0);
    CHECK(x + y - x * y == doctest::Approx(0.01).epsilon(1e-9));
    Matrix t = entry_probabilities(p, ProbabilityScheme::relaxed(1.0, true));
    CHECK(t(0, 0) == doctest::Approx(0.21207).epsilon(1e-4));
}

TEST_CASE("expected_sample_size: full table and the no-clip identity") {
    CHECK(expected_sample_size(Matrix::Ones(7, 3)) == doctest::Approx(21.0));

    // Incoherent-ish profile, small enough that no entry clips at 1.
    const Index m = 40, n = 30, r = 2;
    LeverageProfile prof = leverage_scores(truncated_svd(random_low_rank(m, n, r, 77), r));
    ProbabilityScheme scheme = ProbabilityScheme::relaxed(1e-3, true);
    Matrix t = entry_probabilities(prof, scheme);
    REQUIRE(t.maxCoeff() < 1.0);
    const double lg = std::log(static_cast<double>(m + n));
    const double expect = 1e-3 * lg * lg * static_cast<double>((m + n) * r - r * r);
    CHECK(expected_sample_size(t) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("relaxation sandwich and dominance properties") {
    // x + y - xy >= sqrt(xy) >= xy on a grid plus random draws.
    for (int a = 0; a <= 50; ++a)
        for (int b = 0; b <= 50; ++b) {
            const double x = a / 50.0, y = b / 50.0;
            const double rel = x + y - x * y;
            CHECK(rel >= std::sqrt(x * y) - 1e-15);
            CHECK(std::sqrt(x * y) >= x * y - 1e-15);
            CHECK(rel >= std::max(x, y) - 1e-15);
        }

    // Entry-wise dominance implies dominance of expected sample sizes.
    LeverageProfile prof = leverage_scores(truncated_svd(random_low_rank(12, 9, 3, 5), 3));
    Matrix rel = entry_probabilities(prof, ProbabilityScheme::relaxed(2.0));
    Matrix lev = entry_probabilities(prof, ProbabilityScheme::leveraged(2.0));
    CHECK(((lev - rel).minCoeff()) >= -1e-15);
    CHECK(expected_sample_size(rel) <= expected_sample_size(lev) + 1e-12);
}

TEST_CASE("custom scheme: table pass-through with validation") {
    LeverageProfile prof = leverage_scores(truncated_svd(random_low_rank(4, 3, 2, 6), 2));
    Matrix table = Matrix::Constant(4, 3, 0.25);
    Matrix out = entry_probabilities(prof, ProbabilityScheme::custom(table));
    CHECK((out - table).norm() == 0.0);

    Matrix bad = Matrix::Constant(4, 3, 1.5);
    CHECK_THROWS_AS(entry_probabilities(prof, ProbabilityScheme::custom(bad)),
                    std::invalid_argument);
    CHECK_THROWS_AS(entry_probabilities(prof, ProbabilityScheme::custom(Matrix::Ones(3, 3))),
                    std::invalid_argument);
}

TEST_CASE("kernel parity: probability table serial vs OpenMP") {
    LeverageProfile prof = leverage_scores(truncated_svd(random_low_rank(33, 27, 4, 13), 4));
    for (const auto& scheme : {ProbabilityScheme::relaxed(3.0, true, 1e-9),
                               ProbabilityScheme::leveraged(2.0),
                               ProbabilityScheme::uniform(0.4)}) {
        Matrix a = kern::probability_table(prof, scheme);
        Matrix b = kern::serial::probability_table(prof, scheme);
        CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    }
}
