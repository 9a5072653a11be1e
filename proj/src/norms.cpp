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
#include "rlmc/norms.hpp"

#include <cmath>

#include "rlmc/svd.hpp"

namespace rlmc {

namespace {

void check_profile(const Matrix& x, const LeverageProfile& p) {
    if (p.rows != x.rows() || p.cols != x.cols())
        throw std::invalid_argument("norms: leverage profile dimension mismatch");
}

}  // namespace

double mu_inf2_norm(const Matrix& x, const LeverageProfile& profile) {
    check_profile(x, profile);
    double best = 0.0;
    for (Index i = 0; i < x.rows(); ++i) {
        const double mass = profile.row_mass(i);
        const double rn = x.row(i).norm();
        if (mass <= 0.0) {
            if (rn > 0.0)
                throw std::domain_error("mu_inf2_norm: zero leverage score on nonzero row " +
                                        std::to_string(i) + " (infinite weight)");
            continue;
        }
        best = std::max(best, rn / std::sqrt(mass));
    }
    for (Index j = 0; j < x.cols(); ++j) {
        const double mass = profile.col_mass(j);
        const double cn = x.col(j).norm();
        if (mass <= 0.0) {
            if (cn > 0.0)
                throw std::domain_error("mu_inf2_norm: zero leverage score on nonzero column " +
                                        std::to_string(j) + " (infinite weight)");
            continue;
        }
        best = std::max(best, cn / std::sqrt(mass));
    }
    return best;
}

double mu_inf_norm(const Matrix& x, const LeverageProfile& profile) {
    check_profile(x, profile);
    double best = 0.0;
    for (Index i = 0; i < x.rows(); ++i) {
        const double xm = profile.row_mass(i);
        for (Index j = 0; j < x.cols(); ++j) {
            const double v = std::abs(x(i, j));
            if (v == 0.0) continue;
            const double ym = profile.col_mass(j);
            if (xm <= 0.0 || ym <= 0.0)
                throw std::domain_error("mu_inf_norm: zero leverage score on nonzero entry (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        ") (infinite weight)");
            best = std::max(best, v / std::sqrt(xm * ym));
        }
    }
    return best;
}

NormBundle norms(const Matrix& x) {
    require_finite(x, "norms");
    NormBundle b;
    b.frobenius = x.norm();
    b.max_entry = x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
    if (b.frobenius == 0.0) return b;  // zero matrix: every norm is 0
    SvdResult svd = svd_full(x);
    b.spectral = svd.sigma.size() > 0 ? svd.sigma(0) : 0.0;
    b.nuclear = svd.sigma.sum();
    return b;
}

NormBundle norms(const Matrix& x, const LeverageProfile& profile) {
    NormBundle b = norms(x);
    b.mu_inf2 = mu_inf2_norm(x, profile);
    b.mu_inf = mu_inf_norm(x, profile);
    return b;
}

}  // namespace rlmc
