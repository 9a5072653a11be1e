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

#include "rlmc/leverage.hpp"
#include "rlmc/solver.hpp"

namespace rlmc {

enum class ErrorMode { Relative, Absolute };

/// The trial/success protocol: `trials` independent draw-then-complete
/// cycles; a run passes when at least `success_threshold` trials recover the
/// matrix to within `epsilon` in the configured error mode.
struct TrialProtocol {
    int trials = 10;
    int success_threshold = 9;
    double epsilon = 1e-3;
    ErrorMode error_mode = ErrorMode::Relative;
};

struct TrialOutcome {
    int trial = 0;
    bool success = false;
    double error = 0.0;
    std::size_t sample_size = 0;
    int iterations = 0;
    bool converged = false;
};

struct TrialSummary {
    std::vector<TrialOutcome> outcomes;  // ordered by trial index
    int successes = 0;
    double avg_success_sample_size = 0.0;  // mean realized |Omega| over successful trials
    bool passed = false;
    double expected_sample_size = 0.0;     // sum of the scheme's p_ij
};

TrialSummary recover_with_scheme(const Matrix& m, Index rank, const ProbabilityScheme& scheme,
                                 const TrialProtocol& protocol, std::uint64_t seed,
                                 const SolverConfig& solver = {});

struct CalibrationResult {
    bool found = false;
    int constant = 0;                  // smallest integer c passing the protocol
    double avg_sample_size = 0.0;      // at that constant
    TrialSummary summary;              // the passing run
    int sweep_cap = 64;
};

/// Integer sweep c = 1, 2, 3, ... (log factor off, no floor) until the
/// protocol passes; `found` is false once the cap is exceeded.
CalibrationResult calibrate_constant(const Matrix& m, Index rank, SchemeKind kind,
                                     const TrialProtocol& protocol, std::uint64_t seed,
                                     int sweep_cap = 64, const SolverConfig& solver = {});

/// Sample-size gain of relaxed over plain leveraged sampling,
/// delta_s = sqrt((s_l - s_r) / c_r).
struct GainReport {
    double s_l = 0.0;
    double s_r = 0.0;
    int c_l = 0;
    int c_r = 0;
    bool calibrated = false;      // both sweeps found a constant
    bool negative_gain = false;   // s_l < s_r; delta_s undefined
    double delta_s = 0.0;
    Index rank = 0;
};

GainReport gain_report(const Matrix& m, Index rank, const TrialProtocol& protocol,
                       std::uint64_t seed, int sweep_cap = 64, const SolverConfig& solver = {});

/// Column-space-incoherent completion without prior leverage knowledge:
/// observe full rows at p = min(c2 mu0 rank log(m)/m, 1), use their span's
/// column scores as estimates, sample with the relaxed probabilities built
/// from (mu0, estimated scores), then solve.
struct Algorithm1Result {
    RecoveryReport report;
    std::size_t row_samples = 0;     // |Gamma| * n
    std::size_t entry_samples = 0;   // |Omega|
    double expected_total = 0.0;     // p*m*n + sum p_ij
    Vector estimated_col_scores;     // nu~_j
    std::vector<Index> gamma;
    bool rank_deficient = false;     // rank(S_Gamma(M)) < rank
    bool coherence_warning = false;  // measured max mu_i exceeds supplied mu0
    double error = 0.0;              // ||M - X*||_F / ||M||_F
};

Algorithm1Result algorithm1_column_incoherent(const Matrix& m, Index rank, double mu0,
                                              double c2, double c1, std::uint64_t seed,
                                              const SolverConfig& solver = {});

/// Two-phase heuristic: |Omega_1| = floor(beta*s) uniform entries without
/// replacement, leverage scores estimated from the zero-filled phase-1
/// matrix, then the remaining budget drawn without replacement with weights
/// proportional to the estimated (relaxed or summed) scores.
SampleSet two_phase_sample(const Matrix& m, Index rank, std::size_t budget, double beta,
                           bool relaxed, std::uint64_t seed);

}  // namespace rlmc
