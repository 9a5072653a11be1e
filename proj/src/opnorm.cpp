/*
   Copyright 2026 the rlmc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "rlmc/opnorm.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "rlmc/kernels.hpp"
#include "rlmc/rng.hpp"

namespace rlmc {

namespace {

void check_sampled_probabilities(const SampleSet& sample) {
    for (const auto& [i, j] : sample.indices)
        if (sample.probabilities(i, j) <= 0.0)
            throw std::domain_error("operator norm: zero probability on sampled index (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace

double opnorm_materialized(const Subspace& sub, const SampleSet& sample) {
    check_sampled_probabilities(sample);
    const Index m = sub.rows(), n = sub.cols();
    if (sub.rank() == 0) return 0.0;

    const Matrix gu = sub.factorization().U * sub.factorization().U.transpose();
    const Matrix gv = sub.factorization().V * sub.factorization().V.transpose();
    const Matrix b = kern::pt_basis_gram(gu, gv);

    // P_T R_Omega P_T - P_T = sum_ij (delta_ij/p_ij - 1) |P_T(E_ij)><P_T(E_ij)|,
    // i.e. B * diag(w) * B with B the symmetric projected-basis Gram matrix.
    Vector w = Vector::Constant(m * n, -1.0);
    for (const auto& [i, j] : sample.indices)
        w(i * n + j) = 1.0 / sample.probabilities(i, j) - 1.0;

    const Matrix a = b * w.asDiagonal() * b;
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double opnorm_power_iteration(const Subspace& sub, const SampleSet& sample) {
    check_sampled_probabilities(sample);
    const Index m = sub.rows(), n = sub.cols();
    if (sub.rank() == 0) return 0.0;

    const auto apply = [&](const Matrix& z) -> Matrix {
        const Matrix ptz = sub.project_T(z);
        return sub.project_T(apply_R_Omega(sample, ptz)) - ptz;
    };

    // Deterministic start vector.
    Matrix v(m, n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j)
            v(i, j) = rng::gaussian(0xA11CE, rng::kGauss, static_cast<std::uint64_t>(i),
                                    static_cast<std::uint64_t>(j));
    v /= v.norm();

    // Iterate on A^2: the operator is symmetric but indefinite, and squaring
    // keeps power iteration from oscillating between +/- eigenvalues.
    double lambda = 0.0;
    for (int it = 0; it < kPowerIterations; ++it) {
        Matrix av = apply(apply(v));
        const double norm = av.norm();
        if (norm == 0.0) return 0.0;
        const double prev = lambda;
        lambda = std::sqrt(norm);  // ||A^2 v|| = lambda_max(A)^2 at the fixed point
        v = av / norm;
        if (it > 0 && std::abs(lambda - prev) <= kPowerTolerance * std::max(lambda, 1e-300))
            break;
    }
    return lambda;
}

double operator_norm_pt_romega_pt_minus_pt(const Subspace& sub, const SampleSet& sample) {
    if (sub.rows() != sample.rows || sub.cols() != sample.cols)
        throw std::invalid_argument("operator norm: dimension mismatch");
    const Index mn = sub.rows() * sub.cols();
    if (mn <= kMaterializeLimit) return opnorm_materialized(sub, sample);
    return opnorm_power_iteration(sub, sample);
}

}  // namespace rlmc
