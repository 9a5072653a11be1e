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

#include <cmath>
#include <vector>

#include "rlmc/opnorm.hpp"
#include "rlmc/sampling.hpp"
#include "rlmc/svd.hpp"

namespace rlmc {

/// Constants used by the optimality machinery.  The failure exponent c must
/// exceed 3; the per-round constant c0 >= 264c, the Theorem-1 constant
/// c1 = 11*c0, and the row-sampling constant c2 >= 20c.
struct TheoryConstants {
    double c = 3.1;
    double c0 = 264.0 * 3.1;
    double c1 = 11.0 * 264.0 * 3.1;
    double c2 = 20.0 * 3.1;
    int k0 = 1;

    static TheoryConstants theory_grade(Index rows, Index cols, double c = 3.1) {
        TheoryConstants t;
        t.c = c;
        t.c0 = 264.0 * c;
        t.c1 = 11.0 * t.c0;
        t.c2 = 20.0 * c;
        t.k0 = static_cast<int>(std::ceil(11.0 * std::log(static_cast<double>(rows + cols))));
        return t;
    }
};

/// Everything Proposition 1 asks of a dual certificate Y.
/// `passed` applies the literal pt_gap threshold sqrt(rank * (m+n)^-15);
/// `passed_practical` substitutes the desk-scale 1e-6 threshold.
struct CertificateReport {
    double pt_gap = 0.0;        // ||P_T(Y) - U V^T||_F
    double tperp_norm = 0.0;    // ||P_{T_perp}(Y)||_2
    double condition1 = 0.0;    // ||P_T R_Omega P_T - P_T||_op
    bool supported_on_omega = false;
    double literal_threshold = 0.0;
    bool passed = false;
    bool passed_practical = false;
};

inline constexpr double kPracticalGapThreshold = 1e-6;

/// Golfing construction: W_0 = 0, W_k = W_{k-1} + R_{Omega_k}(U V^T - P_T(W_{k-1})).
/// Returns Y = W_{k0} and its report; per_round_gaps (when non-null) receives
/// ||U V^T - P_T(W_k)||_F for k = 0..k0.
std::pair<Matrix, CertificateReport> build_dual_certificate(
    const RankFactorization& fact, const GolfingPartition& partition,
    std::vector<double>* per_round_gaps = nullptr);

/// Evaluate Proposition 1's four quantities for an arbitrary candidate Y.
CertificateReport check_proposition1(const RankFactorization& fact, const SampleSet& sample,
                                     const Matrix& y);

}  // namespace rlmc
