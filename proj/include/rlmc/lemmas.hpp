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

#include <cstdint>
#include <string>
#include <vector>

#include "rlmc/certificate.hpp"
#include "rlmc/svd.hpp"

namespace rlmc {

/// Empirical record for one inequality: how often lhs <= rhs held across the
/// evaluated seeds, with running means of both sides.
struct LemmaResult {
    std::string lemma;
    int evaluated = 0;
    int passes = 0;
    double sum_lhs = 0.0;
    double sum_rhs = 0.0;

    double pass_rate() const { return evaluated > 0 ? static_cast<double>(passes) / evaluated : 1.0; }
    double mean_lhs() const { return evaluated > 0 ? sum_lhs / evaluated : 0.0; }
    double mean_rhs() const { return evaluated > 0 ? sum_rhs / evaluated : 0.0; }
};

/// Empirical checks of the concentration lemmas on one factorization.
/// Per seed, a fresh sample is drawn with per-round probabilities
/// q_ij = max(min(c0 log(m+n) L_ij, 1), (mn)^-5) and each inequality is
/// evaluated on Z = U V^T and on a fixed Gaussian Z.  Emits rows:
///   lemma1           ||P_T R P_T - P_T||_op           <= 1/2
///   lemma2_{uv,gauss} ||(R - I)Z||_2                  <= 2 sqrt(c/c0) mu2(Z) + (c/c0) mu(Z)
///   lemma3_{uv,gauss} mu2((P_T R - P_T)Z)             <= (mu2(Z) + mu(Z)) / 2
///   lemma4_{uv,gauss} mu((P_T R - P_T)Z)              <= mu(Z) / 2
///   lemma5           ||(1/p) U^T S_Gamma(U) - I||_2   <= 1/2
///   lemma6           relaxation sandwich violations over grid + random pairs
///   lemma8           ||P_T(Z)||_F <= (1 - op)^{-1/2} max(1/sqrt(p)) ||P_Tperp(Z)||_*
///                    for Z supported off Omega (deterministic when op < 1)
std::vector<LemmaResult> lemma_suite(const RankFactorization& fact, const TheoryConstants& tc,
                                     const std::vector<std::uint64_t>& seeds);

/// Merge per-instance results (same row set) into an aggregate.
void merge_lemma_results(std::vector<LemmaResult>& into, const std::vector<LemmaResult>& from);

/// Violations of x + y - xy >= sqrt(xy) >= xy over a dense grid on [0,1]^2
/// plus `random_pairs` uniform draws.  Zero expected.
long lemma6_violations(int grid, long random_pairs, std::uint64_t seed);

}  // namespace rlmc
