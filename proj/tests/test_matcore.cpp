#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "rlmc/leverage.hpp"
#include "rlmc/norms.hpp"
#include "rlmc/opnorm.hpp"
#include "rlmc/svd.hpp"

using namespace rlmc;
using test_helpers::random_dense;
using test_helpers::random_low_rank;

TEST_CASE("truncated_svd: identity") {
    const Matrix eye = Matrix::Identity(3, 3);
    RankFactorization f = truncated_svd(eye, 3);
    CHECK(f.rank == 3);
    for (Index k = 0; k < 3; ++k) CHECK(f.sigma(k) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((f.U.transpose() * f.U - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((f.V.transpose() * f.V - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((f.reconstruct() - eye).norm() < 1e-10);
}

TEST_CASE("truncated_svd: rank-1 basis outer product") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    RankFactorization f = truncated_svd(m, 1);
    CHECK(f.rank == 1);
    CHECK(f.sigma(0) == doctest::Approx(1.0));
    // Sign convention: largest-magnitude entry of the U column is nonnegative.
    CHECK(f.U(0, 0) == doctest::Approx(1.0));
    CHECK(f.V(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("truncated_svd: exact rank-2 product reconstructs") {
    const Matrix m = random_low_rank(6, 5, 2, 1);
    RankFactorization f = truncated_svd(m, 2);
    CHECK(f.rank == 2);
    CHECK((f.reconstruct() - m).norm() <= 1e-8);
    CHECK(f.sigma(0) >= f.sigma(1));
    CHECK(f.sigma(1) > 0.0);
}

TEST_CASE("truncated_svd: numerical rank below request is reported") {
    const Matrix m = random_low_rank(6, 5, 2, 2);
    RankFactorization f = truncated_svd(m, 4);
    CHECK(f.rank == 2);
}

TEST_CASE("truncated_svd: error paths") {
    const Matrix m = random_low_rank(4, 4, 2, 3);
    CHECK_THROWS_AS(truncated_svd(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(truncated_svd(m, 5), std::invalid_argument);
    Matrix bad = m;
    bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(truncated_svd(bad, 2), std::invalid_argument);
}

TEST_CASE("project_T: fixed points and annihilated directions") {
    const Matrix m = random_low_rank(6, 5, 2, 4);
    RankFactorization f = truncated_svd(m, 2);
    Subspace sub(f);

    const Matrix uv = f.U * f.V.transpose();
    CHECK((sub.project_T(uv) - uv).norm() < 1e-10);

    // u_perp v_perp^T lands entirely in T_perp.
    Eigen::HouseholderQR<Matrix> qru(
        (Matrix(6, 3) << f.U, random_dense(6, 1, 5)).finished());
    Matrix qu = qru.householderQ() * Matrix::Identity(6, 3);
    Eigen::HouseholderQR<Matrix> qrv(
        (Matrix(5, 3) << f.V, random_dense(5, 1, 6)).finished());
    Matrix qv = qrv.householderQ() * Matrix::Identity(5, 3);
    const Matrix perp = qu.col(2) * qv.col(2).transpose();
    CHECK(sub.project_T(perp).norm() < 1e-10);

    CHECK_THROWS_AS(sub.project_T(Matrix::Zero(5, 6)), std::invalid_argument);
}

TEST_CASE("project_T: complementarity, idempotence, self-adjointness") {
    const Matrix m = random_low_rank(7, 6, 3, 7);
    Subspace sub(truncated_svd(m, 3));
    for (std::uint64_t s = 0; s < 8; ++s) {
        const Matrix x = random_dense(7, 6, 100 + s);
        const Matrix y = random_dense(7, 6, 200 + s);
        const Matrix pt = sub.project_T(x);
        CHECK((pt + sub.project_Tperp(x) - x).norm() < 1e-10);
        CHECK((sub.project_T(pt) - pt).norm() < 1e-10);
        const double lhs = (pt.array() * y.array()).sum();
        const double rhs = (x.array() * sub.project_T(y).array()).sum();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("project_T: ||P_T(e_i e_j^T)||_F^2 equals the relaxed score") {
    const Matrix m = random_low_rank(6, 5, 2, 8);
    RankFactorization f = truncated_svd(m, 2);
    Subspace sub(f);
    LeverageProfile prof = leverage_scores(f);
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 5; ++j) {
            Matrix e = Matrix::Zero(6, 5);
            e(i, j) = 1.0;
            const double lhs = sub.project_T(e).squaredNorm();
            CHECK(std::abs(lhs - relaxed_score(prof, i, j)) < 1e-10);
        }
}

TEST_CASE("norms: special cases") {
    const Matrix m = random_low_rank(6, 5, 2, 9);
    RankFactorization f = truncated_svd(m, 2);
    LeverageProfile prof = leverage_scores(f);

    NormBundle uv = norms(f.U * f.V.transpose(), prof);
    CHECK(*uv.mu_inf2 == doctest::Approx(1.0).epsilon(1e-10));

    NormBundle zero = norms(Matrix::Zero(3, 3));
    CHECK(zero.spectral == 0.0);
    CHECK(zero.frobenius == 0.0);
    CHECK(zero.nuclear == 0.0);
    CHECK(zero.max_entry == 0.0);

    Matrix e11 = Matrix::Zero(3, 3);
    e11(0, 0) = 1.0;
    NormBundle nb = norms(e11);
    CHECK(nb.spectral == doctest::Approx(1.0));
    CHECK(nb.frobenius == doctest::Approx(1.0));
    CHECK(nb.nuclear == doctest::Approx(1.0));
    CHECK(nb.max_entry == doctest::Approx(1.0));
}

TEST_CASE("norms: ordering and nuclear consistency with the SVD") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        const Matrix x = random_dense(8, 6, 300 + s);
        NormBundle nb = norms(x);
        CHECK(nb.spectral <= nb.frobenius + 1e-12);
        CHECK(nb.frobenius <= nb.nuclear + 1e-12);
        RankFactorization f = truncated_svd(x, 6);
        CHECK(nb.nuclear == doctest::Approx(f.sigma.sum()).epsilon(1e-8));
    }
}

TEST_CASE("norms: zero leverage score weights") {
    // e1 e1^T: all leverage mass sits on row/column 1.
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    RankFactorization f = truncated_svd(m, 1);
    LeverageProfile prof = leverage_scores(f);

    // A matrix that is zero on every zero-score row/column is fine.
    CHECK(mu_inf2_norm(m, prof) == doctest::Approx(1.0));
    CHECK(mu_inf_norm(m, prof) == doctest::Approx(1.0));

    // Nonzero mass on a zero-score row has infinite weight.
    Matrix bad = Matrix::Zero(4, 4);
    bad(2, 0) = 1.0;
    CHECK_THROWS_AS(mu_inf2_norm(bad, prof), std::domain_error);
    CHECK_THROWS_AS(mu_inf_norm(bad, prof), std::domain_error);
}

TEST_CASE("operator norm: full observation gives zero, empty sample gives one") {
    const Matrix m = random_low_rank(5, 4, 2, 10);
    Subspace sub(truncated_svd(m, 2));

    SampleSet full = draw_bernoulli(m, Matrix::Ones(5, 4), 1);
    CHECK(full.full());
    CHECK(operator_norm_pt_romega_pt_minus_pt(sub, full) < 1e-10);

    SampleSet empty = draw_bernoulli(m, Matrix::Zero(5, 4), 1);
    empty.probabilities = Matrix::Ones(5, 4);  // keep R_Omega well-defined
    CHECK(operator_norm_pt_romega_pt_minus_pt(sub, empty) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("operator norm: materialized and power-iteration routes agree") {
    const Matrix m = random_low_rank(8, 7, 2, 11);
    RankFactorization f = truncated_svd(m, 2);
    Subspace sub(f);
    LeverageProfile prof = leverage_scores(f);
    Matrix probs = entry_probabilities(prof, ProbabilityScheme::relaxed(2.0));
    SampleSet s = draw_bernoulli(m, probs, 99);
    const double exact = opnorm_materialized(sub, s);
    const double power = opnorm_power_iteration(sub, s);
    CHECK(power == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("operator norm: zero probability on a sampled index is rejected") {
    const Matrix m = random_low_rank(4, 4, 2, 12);
    Subspace sub(truncated_svd(m, 2));
    SampleSet s = draw_bernoulli(m, Matrix::Ones(4, 4), 5);
    s.probabilities(0, 0) = 0.0;
    CHECK_THROWS_AS(operator_norm_pt_romega_pt_minus_pt(sub, s), std::domain_error);
}
