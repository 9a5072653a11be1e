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

#include <optional>

#include "rlmc/matrix.hpp"
#include "rlmc/svd.hpp"

namespace rlmc {

/// Normalized row/column leverage scores of a rank factorization:
///   mu_i  = (m / rank) * ||U^T e_i||^2,   nu_j = (n / rank) * ||V^T e_j||^2.
/// Each normalized mass mu_i * rank / m lies in [0, 1] and the masses sum to
/// `rank` on each side.
struct LeverageProfile {
    Vector row_scores;  // mu_i, size m
    Vector col_scores;  // nu_j, size n
    Index rank = 0;
    Index rows = 0;
    Index cols = 0;

    /// mu_i * rank / m, the row mass in [0, 1].
    double row_mass(Index i) const { return row_scores(i) * static_cast<double>(rank) / static_cast<double>(rows); }
    /// nu_j * rank / n, the column mass in [0, 1].
    double col_mass(Index j) const { return col_scores(j) * static_cast<double>(rank) / static_cast<double>(cols); }
};

LeverageProfile leverage_scores(const RankFactorization& fact);

/// Relaxed score L_ij = x + y - x*y with x = mu_i*rank/m, y = nu_j*rank/n.
double relaxed_score(const LeverageProfile& profile, Index i, Index j);

enum class SchemeKind { Uniform, Leveraged, Relaxed, Custom };

/// Per-entry observation probabilities.
///   relaxed:   base = L_ij
///   leveraged: base = mu_i*rank/m + nu_j*rank/n
///   uniform:   base = 1 (the constant itself acts as the probability)
///   custom:    externally supplied table (constant and log factor ignored)
/// p_ij = max(min(constant * base * [log^2(m+n)], 1), floor).
struct ProbabilityScheme {
    SchemeKind kind = SchemeKind::Relaxed;
    double constant = 1.0;
    bool log_factor = false;
    double floor = 0.0;
    std::optional<Matrix> custom_table;

    static ProbabilityScheme relaxed(double c, bool log_factor = false, double floor = 0.0) {
        return {SchemeKind::Relaxed, c, log_factor, floor, std::nullopt};
    }
    static ProbabilityScheme leveraged(double c, bool log_factor = false, double floor = 0.0) {
        return {SchemeKind::Leveraged, c, log_factor, floor, std::nullopt};
    }
    static ProbabilityScheme uniform(double p, bool log_factor = false, double floor = 0.0) {
        return {SchemeKind::Uniform, p, log_factor, floor, std::nullopt};
    }
    static ProbabilityScheme custom(Matrix table, double floor = 0.0) {
        return {SchemeKind::Custom, 1.0, false, floor, std::move(table)};
    }
    /// The theorem-grade relaxed scheme: log^2(m+n) multiplier and the
    /// (mn)^-5 probability floor both active.
    static ProbabilityScheme theorem(double c1, Index m, Index n) {
        const double mn = static_cast<double>(m) * static_cast<double>(n);
        return {SchemeKind::Relaxed, c1, true, std::pow(mn, -5.0), std::nullopt};
    }
};

/// Materialize the full m x n probability table for a scheme.
Matrix entry_probabilities(const LeverageProfile& profile, const ProbabilityScheme& scheme);

/// E[s] = sum_ij p_ij.
double expected_sample_size(const Matrix& probabilities);

}  // namespace rlmc
