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

#include "rlmc/matrix.hpp"

namespace rlmc {

/// Relative cutoff below which trailing singular values count as numerically zero.
inline constexpr double kSingularValueCutoff = 1e-12;

/// Truncated SVD A ~ U * diag(sigma) * V^T with orthonormal-column U, V and
/// strictly positive, nonincreasing sigma.  Column signs are fixed so the
/// largest-magnitude entry of each U column is nonnegative.
struct RankFactorization {
    Matrix U;         // m x rank
    Vector sigma;     // rank, positive, nonincreasing
    Matrix V;         // n x rank
    Index rank = 0;   // retained rank (may be less than requested)

    Index rows() const { return U.rows(); }
    Index cols() const { return V.rows(); }
    Matrix reconstruct() const { return U * sigma.asDiagonal() * V.transpose(); }
};

/// Full thin SVD with the same sign convention; the single dense SVD backend
/// every other routine builds on.
struct SvdResult {
    Matrix U;
    Vector sigma;
    Matrix V;
};

SvdResult svd_full(const Matrix& a);

/// Top-`rank` singular triplets of `a`.  Trailing singular values below
/// kSingularValueCutoff * sigma_1 are dropped and the returned rank reduced.
RankFactorization truncated_svd(const Matrix& a, Index rank);

/// Tangent space T of a rank factorization: matrices sharing the row or
/// column space of the source matrix.  Projections are pure and the type is
/// immutable, so instances are safe to share across threads.
class Subspace {
  public:
    explicit Subspace(RankFactorization fact) : fact_(std::move(fact)) {}

    const RankFactorization& factorization() const { return fact_; }
    Index rows() const { return fact_.rows(); }
    Index cols() const { return fact_.cols(); }
    Index rank() const { return fact_.rank; }

    /// P_T(X) = U U^T X + X V V^T - U U^T X V V^T
    Matrix project_T(const Matrix& x) const;
    /// P_{T_perp}(X) = X - P_T(X)
    Matrix project_Tperp(const Matrix& x) const;

  private:
    RankFactorization fact_;
};

}  // namespace rlmc
