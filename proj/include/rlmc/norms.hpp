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

#include "rlmc/leverage.hpp"
#include "rlmc/matrix.hpp"

namespace rlmc {

/// All matrix norms used by the library.  The weighted infinity norms are
/// present only when a LeverageProfile was supplied:
///   mu_inf2 = max { max_i sqrt(m/(mu_i r)) ||row_i||_2 , max_j sqrt(n/(nu_j r)) ||col_j||_2 }
///   mu_inf  = max_ij |Z_ij| sqrt(m/(mu_i r)) sqrt(n/(nu_j r))
/// A zero leverage score contributes 0 when the matching row/column of Z is
/// zero too; otherwise the weight is infinite and norms() reports an error.
struct NormBundle {
    double spectral = 0.0;
    double frobenius = 0.0;
    double nuclear = 0.0;
    double max_entry = 0.0;
    std::optional<double> mu_inf2;
    std::optional<double> mu_inf;
};

NormBundle norms(const Matrix& x);
NormBundle norms(const Matrix& x, const LeverageProfile& profile);

/// Weighted norms alone (cheaper than the full bundle; no SVD).
double mu_inf2_norm(const Matrix& x, const LeverageProfile& profile);
double mu_inf_norm(const Matrix& x, const LeverageProfile& profile);

}  // namespace rlmc
