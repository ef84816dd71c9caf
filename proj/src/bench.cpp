#include "sroots/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sroots {

namespace {

SeriesPoly product(const PrimeField& F, std::vector<SeriesPoly> factors) {
    while (factors.size() > 1) {
        std::vector<SeriesPoly> next;
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(mul(F, factors[i], factors[i + 1]));
        if (factors.size() % 2) next.push_back(std::move(factors.back()));
        factors = std::move(next);
    }
    return std::move(factors.front());
}

}  // namespace

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::fast: return "fast";
        case Algorithm::dnc_reference: return "dnc";
        case Algorithm::iterative_reference: return "iter";
    }
    return "?";
}

SeriesPoly repeated_root_family(const PrimeField& F, std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("repeated-root family needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, F.modulus() - 1);
    const bool spread = F.modulus() >= n;
    std::set<std::uint32_t> used;

    std::vector<SeriesPoly> factors;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Fp> f(d);
        do {
            f[0] = Fp{digit(rng)};
        } while (spread && used.count(f[0].v));
        used.insert(f[0].v);
        for (std::size_t k = 1; k < d; ++k) f[k] = Fp{digit(rng)};

        std::vector<Fp> data(2 * d);
        for (std::size_t k = 0; k < d; ++k) data[k] = F.neg(f[k]);
        data[d] = F.one();
        SeriesPoly lin(d, std::move(data));  // y - f_i
        if (i == 0) factors.push_back(lin);
        factors.push_back(std::move(lin));
    }
    return product(F, std::move(factors));
}

std::vector<BenchRow> run_benchmark(const PrimeField& F, const std::vector<std::size_t>& sizes, std::size_t d,
                                    const std::vector<Algorithm>& algorithms, std::size_t runs, std::uint64_t seed) {
    if (runs == 0) throw std::invalid_argument("need at least one run");
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        const SeriesPoly Q = repeated_root_family(F, n, d, seed + n);
        for (Algorithm a : algorithms) {
            SolverConfig cfg;
            cfg.seed = seed;
            cfg.algorithm = a;
            std::vector<double> times;
            for (std::size_t r = 0; r < runs; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                const RootSet rs = series_roots(F, Q, d, cfg);
                const auto t1 = std::chrono::steady_clock::now();
                if (rs.empty()) throw std::logic_error("benchmark instance lost its roots");
                times.push_back(std::chrono::duration<double>(t1 - t0).count());
            }
            std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
            rows.push_back({algorithm_name(a), n, d, std::max(times[times.size() / 2], 1e-9)});
        }
    }
    return rows;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "algorithm,n,d,seconds\n";
    for (const auto& r : rows) out << r.algorithm << ',' << r.n << ',' << r.d << ',' << r.seconds << '\n';
    return out.str();
}

double fit_exponent(const std::vector<BenchRow>& rows, const std::string& algorithm) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t k = 0;
    for (const auto& r : rows) {
        if (r.algorithm != algorithm) continue;
        const double x = std::log(static_cast<double>(r.n));
        const double y = std::log(r.seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++k;
    }
    if (k < 2) throw std::invalid_argument("need two sizes to fit an exponent");
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace sroots
