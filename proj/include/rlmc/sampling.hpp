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

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rlmc/matrix.hpp"

namespace rlmc {

/// A realized Bernoulli sample: the observed index set Omega (row-major
/// sorted), the probability table used at draw time, and the observed values.
/// Redrawing with the same (seed, table, round) reproduces Omega exactly.
/// Immutable once constructed; safe to share across threads.
struct SampleSet {
    Index rows = 0;
    Index cols = 0;
    std::vector<std::pair<Index, Index>> indices;
    Matrix probabilities;         // m x n table
    std::vector<double> values;   // M_ij for each index, same order
    std::uint64_t seed = 0;

    std::size_t size() const { return indices.size(); }
    bool full() const { return size() == static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
};

/// Independently include each (i,j) with probability p_ij.  One uniform
/// variate is drawn per (entry, round); schemes sharing a seed therefore
/// share the underlying variates, and entrywise-dominated tables yield
/// nested sample sets.
SampleSet draw_bernoulli(const Matrix& m, const Matrix& probabilities,
                         std::uint64_t seed, std::uint64_t round = 0);

/// Build a SampleSet from an explicit index list (used by two-phase sampling
/// and by tests).  Probabilities default to 1 on the listed indices.
SampleSet sample_from_indices(const Matrix& m, std::vector<std::pair<Index, Index>> indices,
                              std::uint64_t seed);

/// R_Omega(X) = sum_{(i,j) in Omega} (1/p_ij) X_ij e_i e_j^T.
Matrix apply_R_Omega(const SampleSet& s, const Matrix& x);

/// Unweighted restriction: (P_Omega(X))_ij = X_ij on Omega, 0 elsewhere.
Matrix apply_P_Omega(const SampleSet& s, const Matrix& x);

/// k0 independent Bernoulli(q_ij) rounds whose union is distributed as
/// Bernoulli(p_ij), with q_ij = 1 - (1 - p_ij)^(1/k0).
struct GolfingPartition {
    std::vector<SampleSet> rounds;
    Matrix per_round_probability;  // q_ij
    int k0 = 0;
    SampleSet omega_union;         // union of rounds, carrying the original p_ij
};

GolfingPartition golfing_partition(const Matrix& m, const Matrix& probabilities,
                                   int k0, std::uint64_t seed);

/// k0 = ceil(11 * ln(m + n)).
int default_golfing_rounds(Index rows, Index cols);

/// Observe whole rows, each picked independently with probability p.
/// Returns the picked row indices Gamma and M with the other rows zeroed.
struct RowSample {
    std::vector<Index> gamma;
    Matrix restricted;  // S_Gamma(M)
};

RowSample sample_full_rows(const Matrix& m, double p, std::uint64_t seed);

/// CSV serialization, header line `# rlmc-sample-set v1 seed=... rows=... cols=...`
/// then `i,j,p,value` rows.  Round-trips bit-exactly.
void write_sample_csv(std::ostream& os, const SampleSet& s);
SampleSet read_sample_csv(std::istream& is);

}  // namespace rlmc
