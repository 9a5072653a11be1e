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
#include "rlmc/dataset.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rlmc/csv.hpp"
#include "rlmc/rng.hpp"
#include "rlmc/svd.hpp"

namespace rlmc {

namespace {

[[noreturn]] void parse_error(const std::string& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

Dataset ingest_triplets(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    std::string line;
    std::size_t lineno = 0;
    Index decl_rows = 0, decl_cols = 0;

    struct Triplet {
        Index i, j;
        double v;
    };
    std::vector<Triplet> triplets;
    Index max_i = 0, max_j = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line);
            std::string hash, word;
            hs >> hash >> word;
            if (word == "dims" && !(hs >> decl_rows >> decl_cols))
                parse_error(path, lineno, "malformed dims header");
            continue;
        }
        std::istringstream ls(line);
        long user, item;
        double rating;
        if (!(ls >> user >> item >> rating))
            parse_error(path, lineno, "expected `user item rating`");
        if (user < 1 || item < 1)
            parse_error(path, lineno, "ids are 1-based");
        triplets.push_back({user - 1, item - 1, rating});
        max_i = std::max<Index>(max_i, user);
        max_j = std::max<Index>(max_j, item);
    }
    const Index rows = decl_rows > 0 ? decl_rows : max_i;
    const Index cols = decl_cols > 0 ? decl_cols : max_j;
    if (rows < 1 || cols < 1) throw std::runtime_error(path + ": empty matrix");
    if (max_i > rows || max_j > cols)
        throw std::runtime_error(path + ": ids exceed declared dims");

    Dataset d;
    d.source_kind = SourceKind::RatingsTriplets;
    d.matrix = Matrix::Zero(rows, cols);
    for (const auto& t : triplets) d.matrix(t.i, t.j) = t.v;
    d.preprocessing_log.push_back("ingest kind=triplets path=" + path +
                                  " rows=" + std::to_string(rows) + " cols=" + std::to_string(cols) +
                                  " nonzeros=" + std::to_string(triplets.size()) +
                                  " unrated-as-zero");
    return d;
}

Dataset ingest_document_term(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::map<Index, double>> docs;
    std::map<std::string, Index> vocab;
    std::size_t dropped = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string token;
        std::map<Index, double> counts;
        while (ls >> token) {
            if (token.size() <= 4) {  // short-word filter
                ++dropped;
                continue;
            }
            const auto [it, inserted] = vocab.try_emplace(token, static_cast<Index>(vocab.size()));
            counts[it->second] += 1.0;
        }
        docs.push_back(std::move(counts));
    }
    if (docs.empty() || vocab.empty()) throw std::runtime_error(path + ": empty matrix");

    Dataset d;
    d.source_kind = SourceKind::DocumentTerm;
    d.matrix = Matrix::Zero(static_cast<Index>(docs.size()), static_cast<Index>(vocab.size()));
    for (Index i = 0; i < d.matrix.rows(); ++i)
        for (const auto& [j, c] : docs[i]) d.matrix(i, j) = c;
    d.preprocessing_log.push_back("ingest kind=document-term path=" + path +
                                  " rows=" + std::to_string(d.matrix.rows()) +
                                  " cols=" + std::to_string(d.matrix.cols()) +
                                  " short-tokens-dropped=" + std::to_string(dropped));
    for (Index i = 0; i < d.matrix.rows(); ++i) {
        const double norm = d.matrix.row(i).norm();
        if (norm > 0.0) d.matrix.row(i) /= norm;
    }
    d.preprocessing_log.push_back("row-normalize l2 (zero rows kept)");
    return d;
}

Dataset ingest_matrix_market(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(f, line)) parse_error(path, 1, "missing MatrixMarket banner");
    std::istringstream banner(line);
    std::string mm, object, format, field, symmetry;
    banner >> mm >> object >> format >> field >> symmetry;
    if (mm != "%%MatrixMarket" || object != "matrix")
        parse_error(path, 1, "not a MatrixMarket matrix");
    if (format != "array" && format != "coordinate")
        parse_error(path, 1, "unsupported format " + format);
    if (field != "real" && field != "integer" && field != "double")
        parse_error(path, 1, "unsupported field " + field);
    if (symmetry != "general")
        parse_error(path, 1, "unsupported symmetry " + symmetry);

    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line[0] != '%') break;
    }
    std::istringstream sz(line);
    Dataset d;
    d.source_kind = SourceKind::MatrixMarket;
    if (format == "array") {
        Index rows, cols;
        if (!(sz >> rows >> cols)) parse_error(path, lineno, "bad size line");
        if (rows < 1 || cols < 1) throw std::runtime_error(path + ": empty matrix");
        d.matrix.resize(rows, cols);
        // Array format is column-major.
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) {
                double v;
                ++lineno;
                if (!(f >> v)) parse_error(path, lineno, "missing array entry");
                d.matrix(i, j) = v;
            }
        d.preprocessing_log.push_back("ingest kind=matrix-market format=array path=" + path +
                                      " rows=" + std::to_string(rows) +
                                      " cols=" + std::to_string(cols));
    } else {
        Index rows, cols;
        std::size_t nnz;
        if (!(sz >> rows >> cols >> nnz)) parse_error(path, lineno, "bad size line");
        if (rows < 1 || cols < 1) throw std::runtime_error(path + ": empty matrix");
        d.matrix = Matrix::Zero(rows, cols);
        for (std::size_t k = 0; k < nnz; ++k) {
            Index i, j;
            double v;
            ++lineno;
            if (!(f >> i >> j >> v)) parse_error(path, lineno, "missing coordinate entry");
            if (i < 1 || i > rows || j < 1 || j > cols)
                parse_error(path, lineno, "coordinate out of range");
            d.matrix(i - 1, j - 1) = v;
        }
        d.preprocessing_log.push_back("ingest kind=matrix-market format=coordinate path=" + path +
                                      " rows=" + std::to_string(rows) + " cols=" + std::to_string(cols) +
                                      " nonzeros=" + std::to_string(nnz));
    }
    return d;
}

Dataset ingest_dense_csv(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    Matrix m;
    try {
        m = read_dense_csv(f);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    Dataset d;
    d.source_kind = SourceKind::DenseCsv;
    d.matrix = std::move(m);
    d.preprocessing_log.push_back("ingest kind=dense-csv path=" + path +
                                  " rows=" + std::to_string(d.matrix.rows()) +
                                  " cols=" + std::to_string(d.matrix.cols()));
    return d;
}

}  // namespace

Dataset ingest(const std::string& path, SourceKind kind) {
    switch (kind) {
        case SourceKind::RatingsTriplets: return ingest_triplets(path);
        case SourceKind::DocumentTerm: return ingest_document_term(path);
        case SourceKind::MatrixMarket: return ingest_matrix_market(path);
        case SourceKind::DenseCsv: return ingest_dense_csv(path);
        default: throw std::invalid_argument("ingest: synthetic data has no file form");
    }
}

Dataset rank_truncate(Dataset d, Index rank) {
    RankFactorization fact = truncated_svd(d.matrix, rank);
    d.matrix = fact.reconstruct();
    d.preprocessing_log.push_back("rank-truncate rank=" + std::to_string(rank) +
                                  " retained=" + std::to_string(fact.rank));
    return d;
}

namespace {

Matrix gaussian_factor(Index rows, Index rank, std::uint64_t seed, std::uint64_t tag) {
    Matrix g(rows, rank);
    for (Index i = 0; i < rows; ++i)
        for (Index k = 0; k < rank; ++k)
            g(i, k) = rng::gaussian(seed, rng::kGauss, static_cast<std::uint64_t>(i),
                                    static_cast<std::uint64_t>(k), tag);
    return g;
}

}  // namespace

Matrix synth_incoherent(Index rows, Index cols, Index rank, std::uint64_t seed) {
    const Matrix a = gaussian_factor(rows, rank, seed, 1);
    const Matrix b = gaussian_factor(cols, rank, seed, 2);
    return a * b.transpose() / std::sqrt(static_cast<double>(rank));
}

Matrix synth_spiked(Index rows, Index cols, Index rank, double spike, int n_spikes,
                    std::uint64_t seed) {
    Matrix a = gaussian_factor(rows, rank, seed, 1);
    Matrix b = gaussian_factor(cols, rank, seed, 2);
    for (int s = 0; s < n_spikes; ++s) {
        a.row(s % rows) *= spike;
        b.row(s % cols) *= spike;
    }
    return a * b.transpose() / std::sqrt(static_cast<double>(rank));
}

Matrix synth_power_law(Index rows, Index cols, Index rank, double alpha, std::uint64_t seed) {
    Matrix a = gaussian_factor(rows, rank, seed, 1);
    Matrix b = gaussian_factor(cols, rank, seed, 2);
    for (Index i = 0; i < rows; ++i) a.row(i) *= std::pow(static_cast<double>(i + 1), -alpha);
    for (Index j = 0; j < cols; ++j) b.row(j) *= std::pow(static_cast<double>(j + 1), -alpha);
    return a * b.transpose() / std::sqrt(static_cast<double>(rank));
}

void write_dense_csv(std::ostream& os, const Matrix& m, const std::string& header_comment) {
    if (!header_comment.empty()) os << header_comment << "\n";
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << csv::fmt(m(i, j));
        }
        os << '\n';
    }
}

Matrix read_dense_csv(std::istream& is) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str())
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad number `" + cell + "`");
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("line " + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) throw std::runtime_error("empty matrix");
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace rlmc
