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

// Compares the OpenMP kernels against their serial reference
// implementations: wall time, speedup, and max deviation (expected 0 --
// both paths evaluate identical per-entry expressions).

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "rlmc/dataset.hpp"
#include "rlmc/kernels.hpp"
#include "rlmc/leverage.hpp"
#include "rlmc/svd.hpp"

using namespace rlmc;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm-up
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms, double max_dev) {
    std::printf("%-24s %10.3f ms %10.3f ms %8.2fx %12.3e\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, max_dev);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    std::printf("threads: %d, reps per kernel: %d\n", omp_get_max_threads(), reps);
    std::printf("%-24s %13s %13s %9s %12s\n", "kernel", "serial", "openmp", "speedup",
                "max |diff|");

    {
        const Matrix m = synth_incoherent(1500, 1200, 8, 42);
        const LeverageProfile prof = leverage_scores(truncated_svd(m, 8));
        const ProbabilityScheme scheme = ProbabilityScheme::relaxed(3.0, true, 1e-10);

        Matrix ps, pp;
        const double ts = time_ms([&] { ps = kern::serial::probability_table(prof, scheme); }, reps);
        const double tp = time_ms([&] { pp = kern::probability_table(prof, scheme); }, reps);
        report("probability_table", ts, tp, (ps - pp).cwiseAbs().maxCoeff());

        std::vector<std::uint8_t> ms, mp;
        const double bs = time_ms([&] { ms = kern::serial::bernoulli_mask(pp, 7, 0); }, reps);
        const double bp = time_ms([&] { mp = kern::bernoulli_mask(pp, 7, 0); }, reps);
        double dev = 0.0;
        for (std::size_t k = 0; k < ms.size(); ++k) dev = std::max(dev, std::abs(double(ms[k]) - double(mp[k])));
        report("bernoulli_mask", bs, bp, dev);
    }

    {
        const Matrix m = synth_incoherent(48, 40, 3, 42);
        const RankFactorization fact = truncated_svd(m, 3);
        const Matrix gu = fact.U * fact.U.transpose();
        const Matrix gv = fact.V * fact.V.transpose();

        Matrix bs, bp;
        const double ts = time_ms([&] { bs = kern::serial::pt_basis_gram(gu, gv); }, reps);
        const double tp = time_ms([&] { bp = kern::pt_basis_gram(gu, gv); }, reps);
        report("pt_basis_gram", ts, tp, (bs - bp).cwiseAbs().maxCoeff());
    }
    return 0;
}
