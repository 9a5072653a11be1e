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
#include "rlmc/kernels.hpp"

#include <cmath>

#include "rlmc/rng.hpp"

namespace rlmc::kern {

namespace {

inline double scheme_probability(const ProbabilityScheme& scheme, double log2mn,
                                 double x, double y) {
    double base;
    switch (scheme.kind) {
        case SchemeKind::Uniform:   base = 1.0; break;
        case SchemeKind::Leveraged: base = x + y; break;
        case SchemeKind::Relaxed:   base = x + y - x * y; break;
        default:                    base = 0.0; break;
    }
    double p = scheme.constant * base;
    if (scheme.log_factor) p *= log2mn;
    p = std::min(p, 1.0);
    return std::max(p, scheme.floor);
}

}  // namespace

Matrix probability_table(const LeverageProfile& profile, const ProbabilityScheme& scheme) {
    const Index m = profile.rows, n = profile.cols;
    const double lg = std::log(static_cast<double>(m + n));
    const double log2mn = lg * lg;
    Matrix p(m, n);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < m; ++i) {
        const double x = profile.row_mass(i);
        for (Index j = 0; j < n; ++j)
            p(i, j) = scheme_probability(scheme, log2mn, x, profile.col_mass(j));
    }
    return p;
}

std::vector<std::uint8_t> bernoulli_mask(const Matrix& probabilities,
                                         std::uint64_t seed, std::uint64_t round) {
    const Index m = probabilities.rows(), n = probabilities.cols();
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j)
            mask[static_cast<std::size_t>(i) * n + j] =
                rng::uniform(seed, rng::kEntry, static_cast<std::uint64_t>(i),
                             static_cast<std::uint64_t>(j), round) < probabilities(i, j);
    return mask;
}

Matrix pt_basis_gram(const Matrix& gu, const Matrix& gv) {
    const Index m = gu.rows(), n = gv.rows();
    const Index d = m * n;
    Matrix b(d, d);
#pragma omp parallel for schedule(static)
    for (Index col = 0; col < d; ++col) {
        const Index i = col / n, j = col % n;
        for (Index a = 0; a < m; ++a) {
            const double guai = gu(a, i);
            for (Index bcol = 0; bcol < n; ++bcol) {
                double v = guai * ((bcol == j) ? 1.0 : 0.0) - guai * gv(bcol, j);
                if (a == i) v += gv(bcol, j);
                b(a * n + bcol, col) = v;
            }
        }
    }
    return b;
}

namespace serial {

Matrix probability_table(const LeverageProfile& profile, const ProbabilityScheme& scheme) {
    const Index m = profile.rows, n = profile.cols;
    const double lg = std::log(static_cast<double>(m + n));
    const double log2mn = lg * lg;
    Matrix p(m, n);
    for (Index i = 0; i < m; ++i) {
        const double x = profile.row_mass(i);
        for (Index j = 0; j < n; ++j)
            p(i, j) = scheme_probability(scheme, log2mn, x, profile.col_mass(j));
    }
    return p;
}

std::vector<std::uint8_t> bernoulli_mask(const Matrix& probabilities,
                                         std::uint64_t seed, std::uint64_t round) {
    const Index m = probabilities.rows(), n = probabilities.cols();
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j)
            mask[static_cast<std::size_t>(i) * n + j] =
                rng::uniform(seed, rng::kEntry, static_cast<std::uint64_t>(i),
                             static_cast<std::uint64_t>(j), round) < probabilities(i, j);
    return mask;
}

Matrix pt_basis_gram(const Matrix& gu, const Matrix& gv) {
    const Index m = gu.rows(), n = gv.rows();
    const Index d = m * n;
    Matrix b(d, d);
    for (Index col = 0; col < d; ++col) {
        const Index i = col / n, j = col % n;
        for (Index a = 0; a < m; ++a) {
            const double guai = gu(a, i);
            for (Index bcol = 0; bcol < n; ++bcol) {
                double v = guai * ((bcol == j) ? 1.0 : 0.0) - guai * gv(bcol, j);
                if (a == i) v += gv(bcol, j);
                b(a * n + bcol, col) = v;
            }
        }
    }
    return b;
}

}  // namespace serial

}  // namespace rlmc::kern
