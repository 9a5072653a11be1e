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
#pragma once

#include <functional>
#include <optional>

#include "rlmc/sampling.hpp"
#include "rlmc/svd.hpp"

namespace rlmc {

/// Per-iteration diagnostics: `objective` is the nuclear norm of the prox
/// iterate, `residual` the relative primal residual, `displacement` the
/// Douglas-Rachford fixed-point displacement (monotone under a fixed penalty).
struct IterTrace {
    int iter = 0;
    double objective = 0.0;
    double residual = 0.0;
    double displacement = 0.0;
};

struct SolverConfig {
    int max_iterations = 2000;
    double tolerance = 1e-7;      // relative residual
    double penalty = 0.0;         // <= 0 selects mean |observed value|
    bool penalty_adapt = true;    // residual balancing, factor 2, ratio 10
    std::optional<Matrix> init;   // overrides the default X0 = P_Omega(M)
    std::function<void(const IterTrace&)> trace;
};

struct RecoveryReport {
    Matrix solution;                 // X*
    int iterations = 0;
    double constraint_residual = 0;  // ||P_Omega(X*) - P_Omega(M)||_F / max(1, ||P_Omega(M)||_F)
    double objective = 0;            // ||X*||_*
    bool converged = false;
};

/// Proximal operator of the nuclear norm: soft-shrink every singular value
/// by `threshold` and clamp at zero.
Matrix svt_prox(const Matrix& x, double threshold);

/// min ||X||_* s.t. X_ij = M_ij on Omega, by ADMM splitting: nuclear-norm
/// prox alternating with exact projection onto the affine constraint set.
/// Non-convergence is reported through converged = false, never thrown.
RecoveryReport complete(const SampleSet& sample, const SolverConfig& config = {});

}  // namespace rlmc
