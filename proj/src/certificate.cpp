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
#include "rlmc/certificate.hpp"

namespace rlmc {

namespace {

bool is_supported(const SampleSet& sample, const Matrix& y) {
    Matrix restricted = apply_P_Omega(sample, y);
    return (restricted - y).norm() == 0.0;  // exact set-level support check
}

void fill_thresholds(CertificateReport& r, const RankFactorization& fact) {
    const double mn = static_cast<double>(fact.rows() + fact.cols());
    r.literal_threshold = std::sqrt(static_cast<double>(fact.rank) * std::pow(mn, -15.0));
    const bool common = r.condition1 <= 0.5 && r.tperp_norm <= 0.5 && r.supported_on_omega;
    r.passed = common && r.pt_gap <= r.literal_threshold;
    r.passed_practical = common && r.pt_gap <= kPracticalGapThreshold;
}

}  // namespace

std::pair<Matrix, CertificateReport> build_dual_certificate(
    const RankFactorization& fact, const GolfingPartition& partition,
    std::vector<double>* per_round_gaps) {
    const Subspace sub(fact);
    const Matrix uv = fact.U * fact.V.transpose();

    Matrix w = Matrix::Zero(fact.rows(), fact.cols());
    if (per_round_gaps) {
        per_round_gaps->clear();
        per_round_gaps->push_back(uv.norm());  // gap at k = 0
    }
    for (const SampleSet& round : partition.rounds) {
        // Delta_{k-1} = U V^T - P_T(W_{k-1}) already lies in T, so the
        // inner P_T of the update formula is the identity on it.
        Matrix delta = uv - sub.project_T(w);
        w += apply_R_Omega(round, delta);
        if (per_round_gaps) per_round_gaps->push_back((uv - sub.project_T(w)).norm());
    }

    CertificateReport report = check_proposition1(fact, partition.omega_union, w);
    return {std::move(w), report};
}

CertificateReport check_proposition1(const RankFactorization& fact, const SampleSet& sample,
                                     const Matrix& y) {
    if (y.rows() != fact.rows() || y.cols() != fact.cols())
        throw std::invalid_argument("check_proposition1: dimension mismatch");
    const Subspace sub(fact);
    const Matrix uv = fact.U * fact.V.transpose();

    CertificateReport r;
    r.pt_gap = (sub.project_T(y) - uv).norm();
    const Matrix tperp = sub.project_Tperp(y);
    r.tperp_norm = tperp.norm() > 0.0 ? svd_full(tperp).sigma(0) : 0.0;
    r.condition1 = operator_norm_pt_romega_pt_minus_pt(sub, sample);
    r.supported_on_omega = is_supported(sample, y);
    fill_thresholds(r, fact);
    return r;
}

}  // namespace rlmc
