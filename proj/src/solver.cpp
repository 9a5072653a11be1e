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
#include "rlmc/solver.hpp"

#include <cmath>

namespace rlmc {

Matrix svt_prox(const Matrix& x, double threshold) {
    if (threshold < 0.0) throw std::invalid_argument("svt_prox: negative threshold");
    if (threshold == 0.0) return x;
    SvdResult svd = svd_full(x);
    Index keep = 0;
    for (Index k = 0; k < svd.sigma.size(); ++k)
        if (svd.sigma(k) > threshold) ++keep;
    if (keep == 0) return Matrix::Zero(x.rows(), x.cols());
    Vector shrunk = svd.sigma.head(keep).array() - threshold;
    return svd.U.leftCols(keep) * shrunk.asDiagonal() * svd.V.leftCols(keep).transpose();
}

namespace {

double nuclear_norm(const Matrix& x) { return svd_full(x).sigma.sum(); }

}  // namespace

RecoveryReport complete(const SampleSet& sample, const SolverConfig& config) {
    if (sample.indices.empty())
        throw std::invalid_argument("complete: empty sample set");
    if (config.max_iterations < 1 || config.tolerance <= 0.0)
        throw std::invalid_argument("complete: bad solver configuration");

    const Index m = sample.rows, n = sample.cols;
    Matrix observed = Matrix::Zero(m, n);
    double abs_sum = 0.0;
    for (std::size_t k = 0; k < sample.indices.size(); ++k) {
        const auto& [i, j] = sample.indices[k];
        observed(i, j) = sample.values[k];
        abs_sum += std::abs(sample.values[k]);
    }
    const double scale = std::max(1.0, observed.norm());

    // Constraint set is a single point when every entry is observed.
    if (sample.full()) {
        RecoveryReport r;
        r.solution = observed;
        r.iterations = 1;
        r.constraint_residual = 0.0;
        r.objective = nuclear_norm(observed);
        r.converged = true;
        if (config.trace) config.trace({1, r.objective, 0.0, 0.0});
        return r;
    }

    double rho = config.penalty > 0.0
                     ? config.penalty
                     : std::max(abs_sum / static_cast<double>(sample.size()), 1e-8);

    const auto project_affine = [&](Matrix z) {
        for (std::size_t k = 0; k < sample.indices.size(); ++k)
            z(sample.indices[k].first, sample.indices[k].second) = sample.values[k];
        return z;
    };

    Matrix z = config.init ? project_affine(*config.init) : observed;
    Matrix u = Matrix::Zero(m, n);
    Matrix x = z;

    RecoveryReport report;
    for (int it = 1; it <= config.max_iterations; ++it) {
        x = svt_prox(z - u, 1.0 / rho);
        const double displacement = (x - z).norm();
        Matrix z_prev = std::move(z);
        z = project_affine(x + u);
        u += x - z;

        const double primal = (x - z).norm() / scale;
        const double dual = rho * (z - z_prev).norm() / scale;
        report.iterations = it;
        if (config.trace) config.trace({it, svd_full(x).sigma.sum(), primal, displacement});

        if (primal <= config.tolerance && dual <= config.tolerance) {
            report.converged = true;
            break;
        }
        if (config.penalty_adapt && it % 8 == 0) {
            if (primal > 10.0 * dual) {
                rho *= 2.0;
                u /= 2.0;
            } else if (dual > 10.0 * primal) {
                rho /= 2.0;
                u *= 2.0;
            }
        }
    }

    report.solution = std::move(x);
    report.constraint_residual =
        (apply_P_Omega(sample, report.solution) - observed).norm() / scale;
    report.objective = nuclear_norm(report.solution);
    if (report.constraint_residual > config.tolerance) report.converged = false;
    return report;
}

}  // namespace rlmc
