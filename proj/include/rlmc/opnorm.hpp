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

#include "rlmc/sampling.hpp"
#include "rlmc/svd.hpp"

namespace rlmc {

/// ||P_T R_Omega P_T - P_T||_op, the largest singular value of the composite
/// operator on m x n matrix space.  Materializes the mn x mn operator when
/// mn <= kMaterializeLimit, otherwise runs power iteration on the operator
/// (kPowerIterations steps, kPowerTolerance relative change).
inline constexpr Index kMaterializeLimit = 40000;
inline constexpr int kPowerIterations = 200;
inline constexpr double kPowerTolerance = 1e-8;

double operator_norm_pt_romega_pt_minus_pt(const Subspace& sub, const SampleSet& sample);

/// Force one route or the other (the two routes cross-check each other in tests).
double opnorm_materialized(const Subspace& sub, const SampleSet& sample);
double opnorm_power_iteration(const Subspace& sub, const SampleSet& sample);

}  // namespace rlmc
