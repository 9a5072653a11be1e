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
#include "rlmc/recovery.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "rlmc/rng.hpp"

namespace rlmc {

namespace {

double recovery_error(const Matrix& truth, const Matrix& solution, ErrorMode mode) {
    const double abs_err = (truth - solution).norm();
    if (mode == ErrorMode::Absolute) return abs_err;
    const double denom = truth.norm();
    return denom > 0.0 ? abs_err / denom : abs_err;
}

TrialOutcome run_single_trial(const Matrix& truth, const Matrix& probabilities, int trial,
                              const TrialProtocol& protocol, std::uint64_t seed,
                              const SolverConfig& solver) {
    TrialOutcome o;
    o.trial = trial;
    SampleSet s = draw_bernoulli(truth, probabilities, rng::derive(seed, trial), 0);
    o.sample_size = s.size();
    if (s.indices.empty()) {
        o.error = std::numeric_limits<double>::infinity();
        return o;
    }
    RecoveryReport rep = complete(s, solver);
    o.iterations = rep.iterations;
    o.converged = rep.converged;
    o.error = recovery_error(truth, rep.solution, protocol.error_mode);
    o.success = o.error < protocol.epsilon;
    return o;
}

TrialSummary run_protocol(const Matrix& truth, const Matrix& probabilities,
                          const TrialProtocol& protocol, std::uint64_t seed,
                          const SolverConfig& solver, bool early_abort) {
    if (protocol.success_threshold > protocol.trials || protocol.trials < 1)
        throw std::invalid_argument("run_protocol: success_threshold exceeds trials");

    TrialSummary summary;
    summary.expected_sample_size = probabilities.sum();
    const int max_failures = protocol.trials - protocol.success_threshold;

    std::vector<TrialOutcome> outcomes;
    int failures = 0;
    int next = 0;
    const int wave = std::max(1, omp_get_max_threads());
    while (next < protocol.trials) {
        const int end = early_abort ? std::min(protocol.trials, next + wave) : protocol.trials;
        std::vector<TrialOutcome> batch(end - next);
#pragma omp parallel for schedule(dynamic)
        for (int t = next; t < end; ++t)
            batch[t - next] = run_single_trial(truth, probabilities, t, protocol, seed, solver);
        for (auto& o : batch) {
            if (!o.success) ++failures;
            outcomes.push_back(std::move(o));
        }
        next = end;
        if (early_abort && failures > max_failures) break;  // this constant cannot pass
    }

    summary.outcomes = std::move(outcomes);
    double sum_sizes = 0.0;
    for (const auto& o : summary.outcomes)
        if (o.success) {
            ++summary.successes;
            sum_sizes += static_cast<double>(o.sample_size);
        }
    if (summary.successes > 0)
        summary.avg_success_sample_size = sum_sizes / summary.successes;
    summary.passed = summary.successes >= protocol.success_threshold;
    return summary;
}

/// Ground truth used by the protocol: rank-truncate unless already rank-r.
Matrix protocol_truth(const Matrix& m, Index rank, RankFactorization* fact_out) {
    RankFactorization fact = truncated_svd(m, rank);
    Matrix truth = fact.reconstruct();
    if ((m - truth).norm() <= 1e-9 * std::max(1.0, m.norm())) truth = m;
    if (fact_out) *fact_out = std::move(fact);
    return truth;
}

}  // namespace

TrialSummary recover_with_scheme(const Matrix& m, Index rank, const ProbabilityScheme& scheme,
                                 const TrialProtocol& protocol, std::uint64_t seed,
                                 const SolverConfig& solver) {
    RankFactorization fact;
    const Matrix truth = protocol_truth(m, rank, &fact);
    const Matrix probabilities = entry_probabilities(leverage_scores(fact), scheme);
    return run_protocol(truth, probabilities, protocol, seed, solver, /*early_abort=*/false);
}

CalibrationResult calibrate_constant(const Matrix& m, Index rank, SchemeKind kind,
                                     const TrialProtocol& protocol, std::uint64_t seed,
                                     int sweep_cap, const SolverConfig& solver) {
    if (kind == SchemeKind::Custom)
        throw std::invalid_argument("calibrate_constant: custom schemes have no constant to sweep");
    RankFactorization fact;
    const Matrix truth = protocol_truth(m, rank, &fact);
    const LeverageProfile profile = leverage_scores(fact);

    CalibrationResult result;
    result.sweep_cap = sweep_cap;
    for (int c = 1; c <= sweep_cap; ++c) {
        ProbabilityScheme scheme{kind, static_cast<double>(c), /*log_factor=*/false,
                                 /*floor=*/0.0, std::nullopt};
        TrialSummary s = run_protocol(truth, entry_probabilities(profile, scheme), protocol,
                                      seed, solver, /*early_abort=*/true);
        if (s.passed) {
            result.found = true;
            result.constant = c;
            result.avg_sample_size = s.avg_success_sample_size;
            result.summary = std::move(s);
            return result;
        }
    }
    return result;
}

GainReport gain_report(const Matrix& m, Index rank, const TrialProtocol& protocol,
                       std::uint64_t seed, int sweep_cap, const SolverConfig& solver) {
    GainReport g;
    g.rank = rank;
    CalibrationResult lev = calibrate_constant(m, rank, SchemeKind::Leveraged, protocol,
                                               seed, sweep_cap, solver);
    CalibrationResult rel = calibrate_constant(m, rank, SchemeKind::Relaxed, protocol,
                                               seed, sweep_cap, solver);
    if (!lev.found || !rel.found) return g;
    g.calibrated = true;
    g.c_l = lev.constant;
    g.c_r = rel.constant;
    g.s_l = lev.avg_sample_size;
    g.s_r = rel.avg_sample_size;
    if (g.s_l >= g.s_r)
        g.delta_s = std::sqrt((g.s_l - g.s_r) / static_cast<double>(g.c_r));
    else
        g.negative_gain = true;
    return g;
}

Algorithm1Result algorithm1_column_incoherent(const Matrix& m, Index rank, double mu0,
                                              double c2, double c1, std::uint64_t seed,
                                              const SolverConfig& solver) {
    const Index rows = m.rows(), cols = m.cols();
    if (mu0 < 1.0 || mu0 > static_cast<double>(rows) / static_cast<double>(rank))
        throw std::invalid_argument("algorithm1: mu0 must lie in [1, m/rank]");

    Algorithm1Result out;
    RankFactorization fact;
    const Matrix truth = protocol_truth(m, rank, &fact);
    const LeverageProfile profile = leverage_scores(fact);
    out.coherence_warning = profile.row_scores.maxCoeff() > mu0 * (1.0 + 1e-9);

    const double p = std::min(
        c2 * mu0 * static_cast<double>(rank) * std::log(static_cast<double>(rows)) /
            static_cast<double>(rows),
        1.0);
    RowSample rs = sample_full_rows(truth, p, seed);
    out.gamma = rs.gamma;
    out.row_samples = rs.gamma.size() * static_cast<std::size_t>(cols);

    // Column leverage of the sampled-row span, used as the estimate of nu_j.
    Vector col_mass = Vector::Zero(cols);
    if (!rs.gamma.empty()) {
        RankFactorization sub = truncated_svd(rs.restricted, rank);
        out.rank_deficient = sub.rank < rank;
        col_mass = sub.V.rowwise().squaredNorm();
    } else {
        out.rank_deficient = true;
    }
    out.estimated_col_scores =
        col_mass * (static_cast<double>(cols) / static_cast<double>(rank));

    const double x = std::min(mu0 * static_cast<double>(rank) / static_cast<double>(rows), 1.0);
    const double lg = std::log(static_cast<double>(rows + cols));
    Matrix table(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        const double y = std::min(col_mass(j), 1.0);
        const double l = x + y - x * y;
        table.col(j).setConstant(std::min(c1 * l * lg * lg, 1.0));
    }
    out.expected_total = p * static_cast<double>(rows) * static_cast<double>(cols) + table.sum();

    SampleSet omega = draw_bernoulli(truth, table, seed, 0);
    out.entry_samples = omega.size();
    if (omega.indices.empty()) {
        out.report.converged = false;
        out.error = std::numeric_limits<double>::infinity();
        return out;
    }
    out.report = complete(omega, solver);
    out.error = recovery_error(truth, out.report.solution, ErrorMode::Relative);
    return out;
}

SampleSet two_phase_sample(const Matrix& m, Index rank, std::size_t budget, double beta,
                           bool relaxed, std::uint64_t seed) {
    const Index rows = m.rows(), cols = m.cols();
    const std::size_t total = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (budget < 1 || budget > total)
        throw std::invalid_argument("two_phase_sample: budget must lie in [1, m*n]");
    if (beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("two_phase_sample: beta must lie in [0,1]");

    const std::size_t s1 = static_cast<std::size_t>(std::floor(beta * static_cast<double>(budget)));
    const std::size_t s2 = budget - s1;
    if (s1 == 0 && s2 > 0)
        throw std::invalid_argument(
            "two_phase_sample: degenerate phase 1 (no entries to estimate scores from)");

    struct Keyed {
        double key;
        Index i, j;
    };

    // Phase 1: uniform without replacement = smallest s1 uniform keys.
    std::vector<Keyed> keys;
    keys.reserve(total);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            keys.push_back({rng::uniform(seed, rng::kPhaseOne, static_cast<std::uint64_t>(i),
                                         static_cast<std::uint64_t>(j)),
                            i, j});
    std::sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) {
        if (a.key != b.key) return a.key < b.key;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });

    std::vector<std::pair<Index, Index>> chosen;
    chosen.reserve(budget);
    std::vector<std::uint8_t> taken(total, 0);
    for (std::size_t k = 0; k < s1; ++k) {
        chosen.emplace_back(keys[k].i, keys[k].j);
        taken[static_cast<std::size_t>(keys[k].i) * cols + keys[k].j] = 1;
    }

    if (s2 > 0) {
        // Estimate leverage masses from the zero-filled phase-1 matrix.
        Matrix filled = Matrix::Zero(rows, cols);
        for (const auto& [i, j] : chosen) filled(i, j) = m(i, j);
        Vector row_mass = Vector::Zero(rows), col_mass = Vector::Zero(cols);
        if (filled.norm() > 0.0) {
            RankFactorization est = truncated_svd(filled, std::min<Index>(rank, std::min(rows, cols)));
            if (est.rank > 0) {
                row_mass = est.U.rowwise().squaredNorm();
                col_mass = est.V.rowwise().squaredNorm();
            }
        }

        // Phase 2: weighted without replacement via exponential keys
        // (largest u^(1/w) first).  Keys are scale-free, so the weights act
        // as if normalized over the unobserved entries.
        const double lg = std::log(static_cast<double>(rows + cols));
        std::vector<Keyed> pool;
        std::vector<Keyed> zero_weight;
        pool.reserve(total - s1);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) {
                if (taken[static_cast<std::size_t>(i) * cols + j]) continue;
                const double x = std::min(row_mass(i), 1.0), y = std::min(col_mass(j), 1.0);
                const double w = (relaxed ? x + y - x * y : x + y) * lg * lg;
                const double u = rng::uniform(seed, rng::kPhaseTwo, static_cast<std::uint64_t>(i),
                                              static_cast<std::uint64_t>(j));
                if (w > 0.0)
                    pool.push_back({std::pow(u, 1.0 / w), i, j});
                else
                    zero_weight.push_back({u, i, j});
            }
        std::sort(pool.begin(), pool.end(), [](const Keyed& a, const Keyed& b) {
            if (a.key != b.key) return a.key > b.key;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        std::size_t need = s2;
        for (std::size_t k = 0; k < pool.size() && need > 0; ++k, --need)
            chosen.emplace_back(pool[k].i, pool[k].j);
        if (need > 0) {
            // Not enough positive-weight entries (e.g. full-budget runs):
            // fill deterministically from the zero-weight pool.
            std::sort(zero_weight.begin(), zero_weight.end(), [](const Keyed& a, const Keyed& b) {
                if (a.key != b.key) return a.key < b.key;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
            for (std::size_t k = 0; k < zero_weight.size() && need > 0; ++k, --need)
                chosen.emplace_back(zero_weight[k].i, zero_weight[k].j);
        }
    }

    return sample_from_indices(m, std::move(chosen), seed);
}

}  // namespace rlmc
