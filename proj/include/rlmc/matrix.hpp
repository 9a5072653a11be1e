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

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace rlmc {

/// Dense real matrix, the value carrier for the whole library.
/// Entries are logically addressed as (row, col); serialization is row-major.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool all_finite(const Matrix& x) { return x.allFinite(); }

inline void require_finite(const Matrix& x, const std::string& what) {
    if (!x.allFinite())
        throw std::invalid_argument(what + ": matrix has non-finite entries");
}

inline void require_same_shape(const Matrix& a, const Matrix& b, const std::string& what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(what + ": dimension mismatch (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
}

inline double frobenius(const Matrix& x) { return x.norm(); }

}  // namespace rlmc
