#pragma once

#include <cstdint>

#include "rlmc/matrix.hpp"
#include "rlmc/rng.hpp"

namespace test_helpers {

/// Random matrix of exact rank r built as a product of Gaussian factors.
inline rlmc::Matrix random_low_rank(rlmc::Index m, rlmc::Index n, rlmc::Index r,
                                    std::uint64_t seed) {
    rlmc::Matrix a(m, r), b(n, r);
    for (rlmc::Index i = 0; i < m; ++i)
        for (rlmc::Index k = 0; k < r; ++k)
            a(i, k) = rlmc::rng::gaussian(seed, rlmc::rng::kGauss, i, k, 11);
    for (rlmc::Index j = 0; j < n; ++j)
        for (rlmc::Index k = 0; k < r; ++k)
            b(j, k) = rlmc::rng::gaussian(seed, rlmc::rng::kGauss, j, k, 22);
    return a * b.transpose();
}

inline rlmc::Matrix random_dense(rlmc::Index m, rlmc::Index n, std::uint64_t seed) {
    rlmc::Matrix x(m, n);
    for (rlmc::Index i = 0; i < m; ++i)
        for (rlmc::Index j = 0; j < n; ++j)
            x(i, j) = rlmc::rng::gaussian(seed, rlmc::rng::kGauss, i, j, 33);
    return x;
}

}  // namespace test_helpers
