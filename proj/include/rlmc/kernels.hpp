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
#include <vector>

#include "rlmc/leverage.hpp"
#include "rlmc/matrix.hpp"

namespace rlmc::kern {

// Data-parallel inner loops, OpenMP versions.  Each kernel computes every
// output element independently, so the parallel and serial paths produce
// bit-identical results; rlmc::kern::serial holds the reference
// implementations the tests compare against.

/// p_ij table for a closed-form scheme (Custom tables are handled upstream).
Matrix probability_table(const LeverageProfile& profile, const ProbabilityScheme& scheme);

/// Row-major inclusion mask: entry (i,j) is 1 iff uniform(seed, kEntry, i, j, round) < p_ij.
std::vector<std::uint8_t> bernoulli_mask(const Matrix& probabilities,
                                         std::uint64_t seed, std::uint64_t round);

/// Gram matrix of the projected basis: B[(a,b),(i,j)] = <e_a e_b^T, P_T(e_i e_j^T)>
/// with rows/columns flattened row-major (index = i*n + j).  B is symmetric.
/// gu = U U^T (m x m), gv = V V^T (n x n).
Matrix pt_basis_gram(const Matrix& gu, const Matrix& gv);

namespace serial {
Matrix probability_table(const LeverageProfile& profile, const ProbabilityScheme& scheme);
std::vector<std::uint8_t> bernoulli_mask(const Matrix& probabilities,
                                         std::uint64_t seed, std::uint64_t round);
Matrix pt_basis_gram(const Matrix& gu, const Matrix& gv);
}  // namespace serial

}  // namespace rlmc::kern
