#pragma once

#include "sroots/series.hpp"

#include <random>

namespace sroots::testing {

using Rng = std::mt19937_64;

inline Fp random_fp(const PrimeField& F, Rng& rng) {
    return Fp{static_cast<std::uint32_t>(rng() % F.modulus())};
}

inline std::vector<Fp> random_digits(const PrimeField& F, Rng& rng, std::size_t n) {
    std::vector<Fp> v(n);
    for (auto& c : v) c = random_fp(F, rng);
    return v;
}

inline SeriesPoly random_poly(const PrimeField& F, Rng& rng, std::size_t deg, std::size_t prec) {
    return SeriesPoly(prec, random_digits(F, rng, (deg + 1) * prec));
}

inline SeriesPoly random_monic(const PrimeField& F, Rng& rng, std::size_t deg, std::size_t prec) {
    std::vector<Fp> data = random_digits(F, rng, (deg + 1) * prec);
    std::fill(data.begin() + deg * prec, data.end(), Fp{});
    data[deg * prec] = F.one();
    return SeriesPoly(prec, std::move(data));
}

inline SeriesPoly linear(const PrimeField& F, std::span<const Fp> f, std::size_t prec) {
    std::vector<Fp> data(2 * prec);
    for (std::size_t i = 0; i < prec && i < f.size(); ++i) data[i] = F.neg(f[i]);
    data[prec] = F.one();
    return SeriesPoly(prec, std::move(data));
}

// Random Q with Q(x=0) != 0. Half of the draws are products of (y - g)^e
// with shared prefixes and a random cofactor, so that deep and repeated
// roots actually occur on small fields.
inline SeriesPoly random_instance(const PrimeField& F, Rng& rng, std::size_t max_deg, std::size_t prec) {
    for (;;) {
        SeriesPoly Q(prec);
        if (rng() % 2 == 0) {
            Q = random_poly(F, rng, rng() % (max_deg + 1), prec);
        } else {
            Q = SeriesPoly::monomial(0, prec, Fp{static_cast<std::uint32_t>(1 + rng() % (F.modulus() - 1))});
            std::size_t deg = 0;
            std::vector<Fp> base = random_digits(F, rng, prec);
            while (deg < max_deg && rng() % 4 != 0) {
                std::vector<Fp> g = base;
                const std::size_t keep = rng() % (prec + 1);
                for (std::size_t i = keep; i < prec; ++i) g[i] = random_fp(F, rng);
                const std::size_t e = 1 + rng() % std::min<std::size_t>(3, max_deg - deg);
                for (std::size_t k = 0; k < e; ++k) Q = mul(F, Q, linear(F, g, prec));
                deg += e;
            }
            if (deg < max_deg && rng() % 2) Q = mul(F, Q, random_poly(F, rng, rng() % (max_deg - deg + 1), prec));
        }
        if (!eval_x0(Q).is_zero()) return Q;
    }
}

// Q(f + x^t y) mod x^k by Horner's rule with schoolbook products.
inline SeriesPoly naive_shift(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f, std::size_t t,
                              std::size_t k) {
    std::vector<Fp> data(2 * k);
    for (std::size_t i = 0; i < k && i < f.size(); ++i) data[i] = f[i];
    if (t < k) data[k + t] = F.one();
    const SeriesPoly lin(k, std::move(data));
    const SeriesPoly Qk = Q.truncated(k);
    SeriesPoly acc(k);
    for (std::size_t j = Qk.rows(); j-- > 0;) {
        acc = add(F, mul_schoolbook(F, acc, lin), SeriesPoly::constant(Qk.coeff_series(j)));
    }
    return acc;
}

}  // namespace sroots::testing
