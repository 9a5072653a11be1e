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
#include "rlmc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "rlmc/csv.hpp"
#include "rlmc/kernels.hpp"
#include "rlmc/rng.hpp"

namespace rlmc {

namespace {

void check_probability_table(const Matrix& p) {
    if (!p.allFinite() || p.minCoeff() < 0.0 || p.maxCoeff() > 1.0)
        throw std::invalid_argument("sampling: probability table entries must lie in [0,1]");
}

}  // namespace

SampleSet draw_bernoulli(const Matrix& m, const Matrix& probabilities,
                         std::uint64_t seed, std::uint64_t round) {
    require_same_shape(m, probabilities, "draw_bernoulli");
    check_probability_table(probabilities);
    const Index rows = m.rows(), cols = m.cols();
    const std::vector<std::uint8_t> mask = kern::bernoulli_mask(probabilities, seed, round);

    SampleSet s;
    s.rows = rows;
    s.cols = cols;
    s.probabilities = probabilities;
    s.seed = seed;
    // Row-major collection keeps the serialized form independent of the
    // parallel schedule used for the mask.
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            if (mask[static_cast<std::size_t>(i) * cols + j]) {
                s.indices.emplace_back(i, j);
                s.values.push_back(m(i, j));
            }
    return s;
}

SampleSet sample_from_indices(const Matrix& m, std::vector<std::pair<Index, Index>> indices,
                              std::uint64_t seed) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    SampleSet s;
    s.rows = m.rows();
    s.cols = m.cols();
    s.seed = seed;
    s.probabilities = Matrix::Zero(m.rows(), m.cols());
    s.indices = std::move(indices);
    s.values.reserve(s.indices.size());
    for (const auto& [i, j] : s.indices) {
        if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols())
            throw std::invalid_argument("sample_from_indices: index out of range");
        s.probabilities(i, j) = 1.0;
        s.values.push_back(m(i, j));
    }
    return s;
}

Matrix apply_R_Omega(const SampleSet& s, const Matrix& x) {
    if (x.rows() != s.rows || x.cols() != s.cols)
        throw std::invalid_argument("apply_R_Omega: dimension mismatch");
    Matrix out = Matrix::Zero(s.rows, s.cols);
    for (const auto& [i, j] : s.indices) {
        const double p = s.probabilities(i, j);
        if (p <= 0.0)
            throw std::domain_error("apply_R_Omega: zero probability on sampled index (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
        out(i, j) = x(i, j) / p;
    }
    return out;
}

Matrix apply_P_Omega(const SampleSet& s, const Matrix& x) {
    if (x.rows() != s.rows || x.cols() != s.cols)
        throw std::invalid_argument("apply_P_Omega: dimension mismatch");
    Matrix out = Matrix::Zero(s.rows, s.cols);
    for (const auto& [i, j] : s.indices) out(i, j) = x(i, j);
    return out;
}

int default_golfing_rounds(Index rows, Index cols) {
    return static_cast<int>(std::ceil(11.0 * std::log(static_cast<double>(rows + cols))));
}

GolfingPartition golfing_partition(const Matrix& m, const Matrix& probabilities,
                                   int k0, std::uint64_t seed) {
    if (k0 < 1) throw std::invalid_argument("golfing_partition: k0 must be >= 1");
    require_same_shape(m, probabilities, "golfing_partition");
    check_probability_table(probabilities);

    GolfingPartition g;
    g.k0 = k0;
    // q = 1 - (1-p)^(1/k0); p = 1 maps to q = 1.
    g.per_round_probability = probabilities.unaryExpr([k0](double p) {
        if (p >= 1.0) return 1.0;
        return 1.0 - std::pow(1.0 - p, 1.0 / static_cast<double>(k0));
    });

    g.rounds.reserve(static_cast<std::size_t>(k0));
    std::vector<std::uint8_t> in_union(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    for (int k = 1; k <= k0; ++k) {
        SampleSet round = draw_bernoulli(m, g.per_round_probability, seed,
                                         static_cast<std::uint64_t>(k));
        for (const auto& [i, j] : round.indices)
            in_union[static_cast<std::size_t>(i) * m.cols() + j] = 1;
        g.rounds.push_back(std::move(round));
    }

    g.omega_union.rows = m.rows();
    g.omega_union.cols = m.cols();
    g.omega_union.probabilities = probabilities;
    g.omega_union.seed = seed;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (in_union[static_cast<std::size_t>(i) * m.cols() + j]) {
                g.omega_union.indices.emplace_back(i, j);
                g.omega_union.values.push_back(m(i, j));
            }
    return g;
}

RowSample sample_full_rows(const Matrix& m, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("sample_full_rows: p must lie in [0,1]");
    RowSample out;
    out.restricted = Matrix::Zero(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        if (rng::uniform(seed, rng::kRow, static_cast<std::uint64_t>(i), 0) < p) {
            out.gamma.push_back(i);
            out.restricted.row(i) = m.row(i);
        }
    }
    return out;
}

void write_sample_csv(std::ostream& os, const SampleSet& s) {
    os << "# rlmc-sample-set v1 seed=" << s.seed << " rows=" << s.rows
       << " cols=" << s.cols << " count=" << s.size() << "\n";
    os << "i,j,p,value\n";
    for (std::size_t k = 0; k < s.indices.size(); ++k) {
        const auto& [i, j] = s.indices[k];
        os << i << ',' << j << ',' << csv::fmt(s.probabilities(i, j)) << ','
           << csv::fmt(s.values[k]) << '\n';
    }
}

SampleSet read_sample_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# rlmc-sample-set v1", 0) != 0)
        throw std::runtime_error("read_sample_csv: missing sample-set header line");

    SampleSet s;
    std::size_t count = 0;
    {
        std::istringstream hs(line.substr(std::string("# rlmc-sample-set v1").size()));
        std::string tok;
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "seed") s.seed = std::stoull(val);
            else if (key == "rows") s.rows = std::stoll(val);
            else if (key == "cols") s.cols = std::stoll(val);
            else if (key == "count") count = std::stoull(val);
        }
    }
    if (s.rows <= 0 || s.cols <= 0)
        throw std::runtime_error("read_sample_csv: bad dimensions in header");
    if (!std::getline(is, line) || line != "i,j,p,value")
        throw std::runtime_error("read_sample_csv: missing column header");

    s.probabilities = Matrix::Zero(s.rows, s.cols);
    std::size_t lineno = 2;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        double f[4];
        for (int t = 0; t < 4; ++t) {
            if (!std::getline(ls, tok, t == 3 ? '\n' : ','))
                throw std::runtime_error("read_sample_csv: malformed line " + std::to_string(lineno));
            f[t] = std::strtod(tok.c_str(), nullptr);
        }
        const Index i = static_cast<Index>(f[0]), j = static_cast<Index>(f[1]);
        if (i < 0 || i >= s.rows || j < 0 || j >= s.cols)
            throw std::runtime_error("read_sample_csv: index out of range at line " + std::to_string(lineno));
        s.indices.emplace_back(i, j);
        s.probabilities(i, j) = f[2];
        s.values.push_back(f[3]);
    }
    if (count != 0 && count != s.size())
        throw std::runtime_error("read_sample_csv: count mismatch");
    return s;
}

}  // namespace rlmc
