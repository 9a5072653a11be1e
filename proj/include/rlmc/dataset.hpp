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
#include <string>
#include <vector>

#include "rlmc/matrix.hpp"

namespace rlmc {

enum class SourceKind { RatingsTriplets, DocumentTerm, MatrixMarket, DenseCsv, Synthetic };

/// A matrix plus the audit trail of every transform applied to it.
struct Dataset {
    Matrix matrix;
    SourceKind source_kind = SourceKind::Synthetic;
    std::vector<std::string> preprocessing_log;
};

/// Parse a file into a dense matrix.
///   RatingsTriplets: whitespace-separated `user item rating [timestamp]`,
///     1-based ids; dimensions from an optional leading `# dims m n` line or
///     from the maximum ids; unrated pairs stored as 0.
///   DocumentTerm: one document per line, whitespace tokens; tokens of
///     length <= 4 are dropped, entries are term frequencies, rows are then
///     normalized to unit l2 norm.  Vocabulary ordered by first appearance.
///   MatrixMarket: `array` and `coordinate` real general formats.
///   DenseCsv: comma-separated rows, `#` comment lines ignored.
Dataset ingest(const std::string& path, SourceKind kind);

/// Replace the matrix by its best rank-r approximation (logged).
Dataset rank_truncate(Dataset d, Index rank);

/// Synthetic generators spanning the coherence regimes:
/// Gaussian factors (incoherent), a few spiked rows/columns (coherent), and
/// power-law scaled factors (smooth leverage decay).
Matrix synth_incoherent(Index rows, Index cols, Index rank, std::uint64_t seed);
Matrix synth_spiked(Index rows, Index cols, Index rank, double spike, int n_spikes,
                    std::uint64_t seed);
Matrix synth_power_law(Index rows, Index cols, Index rank, double alpha, std::uint64_t seed);

/// Dense CSV writer for synthetic outputs (one row per line).
void write_dense_csv(std::ostream& os, const Matrix& m, const std::string& header_comment);
Matrix read_dense_csv(std::istream& is);

}  // namespace rlmc
