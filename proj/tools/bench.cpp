// SPDX-License-Identifier: Apache-2.0
//
// Timing comparison between the OpenMP kernels and their single-threaded
// reference implementations: sign-pattern enumeration and the sampled
// geometry certification.

#include <chrono>
#include <cstdio>
#include <random>

#include "oc/geometry.hpp"
#include "oc/resolve.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

oc::RationalMatrix random_matrix(size_t rows, size_t cols, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    oc::RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            m.at(i, j) = oc::Rational(coeff(rng));
    return m;
}

} // namespace

int main() {
    {
        const size_t kappa = 15;
        auto m = random_matrix(kappa - 3, kappa, 2026);

        auto t0 = std::chrono::steady_clock::now();
        auto serial = oc::feasible_patterns_serial(m, kappa);
        double ts = seconds(t0);

        t0 = std::chrono::steady_clock::now();
        auto parallel = oc::feasible_patterns(m, kappa);
        double tp = seconds(t0);

        std::printf("feasible_patterns  kappa=%zu  patterns=%zu\n", kappa, parallel.size());
        std::printf("  serial   %8.3f s\n", ts);
        std::printf("  parallel %8.3f s  (x%.2f)\n", tp, ts / tp);
        if (serial != parallel) {
            std::printf("  MISMATCH between serial and parallel results\n");
            return 1;
        }
    }

    {
        oc::SampleConfig cfg;
        cfg.seed = 7;
        cfg.count = 4000;

        auto t0 = std::chrono::steady_clock::now();
        auto serial = oc::certify_geometry_serial(3, 1, cfg);
        double ts = seconds(t0);

        t0 = std::chrono::steady_clock::now();
        auto parallel = oc::certify_geometry(3, 1, cfg);
        double tp = seconds(t0);

        std::printf("certify_geometry   r=3 count=%d  pass=%s\n", cfg.count,
                    parallel.pass() ? "yes" : "no");
        std::printf("  serial   %8.3f s\n", ts);
        std::printf("  parallel %8.3f s  (x%.2f)\n", tp, ts / tp);
        if (serial.samples != parallel.samples || serial.min_rank != parallel.min_rank ||
            serial.worst_residual != parallel.worst_residual) {
            std::printf("  MISMATCH between serial and parallel results\n");
            return 1;
        }
    }
    return 0;
}
