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
#include "rlmc/lemmas.hpp"

#include <cmath>

#include "rlmc/leverage.hpp"
#include "rlmc/norms.hpp"
#include "rlmc/rng.hpp"

namespace rlmc {

namespace {

struct Sample1 {
    double lhs = 0.0;
    double rhs = 0.0;
    bool evaluated = true;
    bool pass() const { return lhs <= rhs; }
};

double spectral(const Matrix& x) {
    return x.norm() > 0.0 ? svd_full(x).sigma(0) : 0.0;
}

Matrix gaussian_matrix(Index rows, Index cols, std::uint64_t seed) {
    Matrix z(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            z(i, j) = rng::gaussian(seed, rng::kGauss, static_cast<std::uint64_t>(i),
                                    static_cast<std::uint64_t>(j));
    return z;
}

}  // namespace

long lemma6_violations(int grid, long random_pairs, std::uint64_t seed) {
    long violations = 0;
    const auto check = [&](double x, double y) {
        const double relaxed = x + y - x * y;
        const double mid = std::sqrt(x * y);
        if (relaxed < mid || mid < x * y) ++violations;
    };
    for (int a = 0; a < grid; ++a)
        for (int b = 0; b < grid; ++b)
            check(static_cast<double>(a) / (grid - 1), static_cast<double>(b) / (grid - 1));
    for (long k = 0; k < random_pairs; ++k)
        check(rng::uniform(seed, rng::kGauss, static_cast<std::uint64_t>(k), 0),
              rng::uniform(seed, rng::kGauss, static_cast<std::uint64_t>(k), 1));
    return violations;
}

std::vector<LemmaResult> lemma_suite(const RankFactorization& fact, const TheoryConstants& tc,
                                     const std::vector<std::uint64_t>& seeds) {
    const Index m = fact.rows(), n = fact.cols();
    const Subspace sub(fact);
    const LeverageProfile profile = leverage_scores(fact);
    const Matrix uv = fact.U * fact.V.transpose();
    const double lg = std::log(static_cast<double>(m + n));
    const double ratio = tc.c / tc.c0;

    // Per-round probabilities of Eq-grade form with the probability floor so
    // every inverse weight stays finite.
    const double floor = std::pow(static_cast<double>(m) * static_cast<double>(n), -5.0);
    Matrix q(m, n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) {
            const double l = relaxed_score(profile, i, j);
            q(i, j) = std::max(std::min(tc.c0 * lg * l, 1.0), floor);
        }
    const double max_inv_sqrt_p = 1.0 / std::sqrt(q.minCoeff());

    // Row-sampling probability of Lemma 5 with mu0 = measured max score.
    const double mu0 = profile.row_scores.maxCoeff();
    const double row_p = std::min(
        tc.c2 * mu0 * static_cast<double>(fact.rank) * std::log(static_cast<double>(m)) /
            static_cast<double>(m),
        1.0);

    const std::vector<std::string> row_names = {
        "lemma1",    "lemma2_uv", "lemma2_gauss", "lemma3_uv", "lemma3_gauss",
        "lemma4_uv", "lemma4_gauss", "lemma5",    "lemma8"};
    const int n_rows = static_cast<int>(row_names.size());
    const int n_seeds = static_cast<int>(seeds.size());
    std::vector<Sample1> samples(static_cast<std::size_t>(n_seeds) * n_rows);

#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n_seeds; ++s) {
        const std::uint64_t seed = seeds[s];
        Sample1* row = &samples[static_cast<std::size_t>(s) * n_rows];
        const Matrix zero = Matrix::Zero(m, n);
        SampleSet omega = draw_bernoulli(zero, q, seed, 0);

        const double opn = operator_norm_pt_romega_pt_minus_pt(sub, omega);
        row[0] = {opn, 0.5};

        const Matrix zg = gaussian_matrix(m, n, rng::derive(seed, 101));
        const Matrix zs[2] = {uv, zg};
        for (int t = 0; t < 2; ++t) {
            const Matrix& z = zs[t];
            const double mu2 = mu_inf2_norm(z, profile);
            const double mui = mu_inf_norm(z, profile);
            const Matrix rz = apply_R_Omega(omega, z);
            row[1 + t] = {spectral(rz - z), 2.0 * std::sqrt(ratio) * mu2 + ratio * mui};
            const Matrix pt_dev = sub.project_T(rz) - sub.project_T(z);
            row[3 + t] = {mu_inf2_norm(pt_dev, profile), 0.5 * (mu2 + mui)};
            row[5 + t] = {mu_inf_norm(pt_dev, profile), 0.5 * mui};
        }

        // Lemma 5: inverse-probability-weighted Gram deviation of sampled rows of U.
        {
            RowSample rows = sample_full_rows(uv, row_p, rng::derive(seed, 55));
            Matrix gram = Matrix::Zero(fact.rank, fact.rank);
            for (Index i : rows.gamma)
                gram += fact.U.row(i).transpose() * fact.U.row(i) / row_p;
            row[7] = {spectral(gram - Matrix::Identity(fact.rank, fact.rank)), 0.5};
        }

        // Lemma 8: deterministic consequence of condition1 < 1 for Z off Omega.
        if (opn < 1.0) {
            Matrix z = gaussian_matrix(m, n, rng::derive(seed, 202));
            for (const auto& [i, j] : omega.indices) z(i, j) = 0.0;
            const double lhs = sub.project_T(z).norm();
            const Matrix tperp = sub.project_Tperp(z);
            const double nuc = tperp.norm() > 0.0 ? svd_full(tperp).sigma.sum() : 0.0;
            row[8] = {lhs, max_inv_sqrt_p * nuc / std::sqrt(1.0 - opn)};
        } else {
            row[8].evaluated = false;
        }
    }

    std::vector<LemmaResult> results(n_rows);
    for (int r = 0; r < n_rows; ++r) results[r].lemma = row_names[r];
    for (int s = 0; s < n_seeds; ++s)
        for (int r = 0; r < n_rows; ++r) {
            const Sample1& v = samples[static_cast<std::size_t>(s) * n_rows + r];
            if (!v.evaluated) continue;
            results[r].evaluated += 1;
            results[r].passes += v.pass() ? 1 : 0;
            results[r].sum_lhs += v.lhs;
            results[r].sum_rhs += v.rhs;
        }

    LemmaResult l6;
    l6.lemma = "lemma6";
    const long violations = lemma6_violations(200, 100000, 7);
    l6.evaluated = 1;
    l6.passes = violations == 0 ? 1 : 0;
    l6.sum_lhs = static_cast<double>(violations);
    l6.sum_rhs = 0.0;
    results.insert(results.begin() + 7, l6);  // keep numeric order lemma5, lemma6, lemma8
    return results;
}

void merge_lemma_results(std::vector<LemmaResult>& into, const std::vector<LemmaResult>& from) {
    if (into.empty()) {
        into = from;
        return;
    }
    if (into.size() != from.size())
        throw std::invalid_argument("merge_lemma_results: mismatched row sets");
    for (std::size_t r = 0; r < into.size(); ++r) {
        if (into[r].lemma != from[r].lemma)
            throw std::invalid_argument("merge_lemma_results: mismatched row names");
        into[r].evaluated += from[r].evaluated;
        into[r].passes += from[r].passes;
        into[r].sum_lhs += from[r].sum_lhs;
        into[r].sum_rhs += from[r].sum_rhs;
    }
}

}  // namespace rlmc
