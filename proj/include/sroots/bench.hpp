#pragma once

#include "sroots/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sroots {

/// Q = (y - f_1)^2 (y - f_2) ... (y - f_(n-1)) at precision d, with random
/// series f_i whose constant terms are distinct when p allows it. n >= 2.
SeriesPoly repeated_root_family(const PrimeField& F, std::size_t n, std::size_t d, std::uint64_t seed);

struct BenchRow {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t d = 0;
    double seconds = 0;
};

/// One row per (algorithm, n); `seconds` is the median over `runs` timings
/// of series_roots on the same instance.
std::vector<BenchRow> run_benchmark(const PrimeField& F, const std::vector<std::size_t>& sizes, std::size_t d,
                                    const std::vector<Algorithm>& algorithms, std::size_t runs, std::uint64_t seed);

std::string format_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(seconds) against log(n).
double fit_exponent(const std::vector<BenchRow>& rows, const std::string& algorithm);

const char* algorithm_name(Algorithm a);

}  // namespace sroots
