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
#include "rlmc/leverage.hpp"

#include "rlmc/kernels.hpp"

namespace rlmc {

LeverageProfile leverage_scores(const RankFactorization& fact) {
    if (fact.rank < 1)
        throw std::invalid_argument("leverage_scores: factorization has rank 0");
    LeverageProfile p;
    p.rank = fact.rank;
    p.rows = fact.rows();
    p.cols = fact.cols();
    const double mr = static_cast<double>(p.rows) / static_cast<double>(p.rank);
    const double nr = static_cast<double>(p.cols) / static_cast<double>(p.rank);
    p.row_scores = fact.U.rowwise().squaredNorm() * mr;
    p.col_scores = fact.V.rowwise().squaredNorm() * nr;
    return p;
}

double relaxed_score(const LeverageProfile& profile, Index i, Index j) {
    if (i < 0 || i >= profile.rows || j < 0 || j >= profile.cols)
        throw std::invalid_argument("relaxed_score: index out of range");
    const double x = profile.row_mass(i);
    const double y = profile.col_mass(j);
    return x + y - x * y;
}

Matrix entry_probabilities(const LeverageProfile& profile, const ProbabilityScheme& scheme) {
    if (scheme.kind == SchemeKind::Custom) {
        if (!scheme.custom_table)
            throw std::invalid_argument("entry_probabilities: custom scheme without table");
        const Matrix& t = *scheme.custom_table;
        if (t.rows() != profile.rows || t.cols() != profile.cols)
            throw std::invalid_argument("entry_probabilities: custom table dimension mismatch");
        if (t.minCoeff() < 0.0 || t.maxCoeff() > 1.0)
            throw std::invalid_argument("entry_probabilities: custom table outside [0,1]");
        return t.cwiseMax(scheme.floor);
    }
    if (scheme.constant <= 0.0)
        throw std::invalid_argument("entry_probabilities: scheme constant must be positive");
    return kern::probability_table(profile, scheme);
}

double expected_sample_size(const Matrix& probabilities) {
    return probabilities.sum();
}

}  // namespace rlmc
