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
#include "rlmc/svd.hpp"

#include <Eigen/SVD>

namespace rlmc {

namespace {

// Make the largest-magnitude entry of each U column nonnegative; the
// compensating flip goes to the matching V column so U*S*V^T is unchanged.
void fix_signs(Matrix& u, Matrix& v) {
    for (Index k = 0; k < u.cols(); ++k) {
        Index imax = 0;
        u.col(k).cwiseAbs().maxCoeff(&imax);
        if (u(imax, k) < 0.0) {
            u.col(k) = -u.col(k);
            v.col(k) = -v.col(k);
        }
    }
}

}  // namespace

SvdResult svd_full(const Matrix& a) {
    require_finite(a, "svd_full");
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult out{svd.matrixU(), svd.singularValues(), svd.matrixV()};
    fix_signs(out.U, out.V);
    return out;
}

RankFactorization truncated_svd(const Matrix& a, Index rank) {
    require_finite(a, "truncated_svd");
    const Index maxr = std::min(a.rows(), a.cols());
    if (rank < 1 || rank > maxr)
        throw std::invalid_argument("truncated_svd: rank " + std::to_string(rank) +
                                    " out of range [1, " + std::to_string(maxr) + "]");
    SvdResult full = svd_full(a);
    const double sigma1 = full.sigma.size() > 0 ? full.sigma(0) : 0.0;
    Index keep = 0;
    while (keep < rank && full.sigma(keep) > kSingularValueCutoff * sigma1 && full.sigma(keep) > 0.0)
        ++keep;
    RankFactorization fact;
    fact.U = full.U.leftCols(keep);
    fact.sigma = full.sigma.head(keep);
    fact.V = full.V.leftCols(keep);
    fact.rank = keep;
    return fact;
}

Matrix Subspace::project_T(const Matrix& x) const {
    if (x.rows() != rows() || x.cols() != cols())
        throw std::invalid_argument("project_T: dimension mismatch");
    if (fact_.rank == 0) return Matrix::Zero(x.rows(), x.cols());
    const Matrix& u = fact_.U;
    const Matrix& v = fact_.V;
    Matrix utx = u.transpose() * x;          // rank x n
    Matrix xv = x * v;                       // m x rank
    Matrix utxv = utx * v;                   // rank x rank
    return u * utx + (xv - u * utxv) * v.transpose();
}

Matrix Subspace::project_Tperp(const Matrix& x) const {
    return x - project_T(x);
}

}  // namespace rlmc
