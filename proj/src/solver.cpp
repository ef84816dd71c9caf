#include "sroots/solver.hpp"

#include <stdexcept>

namespace sroots {

namespace {

void require_solvable(const SeriesPoly& Q, std::size_t d) {
    if (d == 0) throw std::invalid_argument("precision must be >= 1");
    if (Q.prec() < d) throw std::invalid_argument("polynomial known below the requested precision");
    if (eval_x0(Q).is_zero()) throw std::domain_error("Q(x=0) must be nonzero");
}

std::size_t half_up(std::size_t d) { return (d + 1) / 2; }

// Roots of x^-s Q(f + x^t y) at precision d - s, or the whole space (keeping
// the outer multiplicity) when the shift vanishes mod x^d.
template <class Solve>
RootSet solve_shift(const PrimeField& F, const SeriesPoly& Q, const Root& outer, std::size_t d, Solve&& solve) {
    const SeriesPoly shifted = shift_y(F, Q, outer.f, outer.t(), d);
    const std::size_t s = x_valuation(shifted);
    if (s >= d) return RootSet({Root::whole_space(outer.m)});
    return solve(divide_by_x_power(shifted, s), d - s);
}

}  // namespace

RootSet precision1_roots(const PrimeField& F, const SeriesPoly& Q, std::uint64_t seed) {
    const DensePoly q0 = eval_x0(Q);
    if (q0.is_zero()) throw std::domain_error("Q(x=0) must be nonzero");
    std::vector<Root> out;
    for (const auto& [y, m] : find_roots_with_multiplicity(F, q0, seed)) out.push_back(Root{{y}, m});
    return RootSet(std::move(out));
}

RootSet dnc_series_roots(const PrimeField& F, const SeriesPoly& Q_in, std::size_t d, std::uint64_t seed) {
    require_solvable(Q_in, d);
    const SeriesPoly Q = Q_in.truncated(d);
    if (d == 1) return precision1_roots(F, Q, seed);

    const std::size_t h = half_up(d);
    const RootSet outer = dnc_series_roots(F, Q.truncated(h), h, seed);
    std::vector<RootSet> inner;
    inner.reserve(outer.size());
    for (const Root& r : outer) {
        inner.push_back(solve_shift(F, Q, r, d, [&](const SeriesPoly& P, std::size_t k) {
            return dnc_series_roots(F, P, k, seed);
        }));
    }
    return compose(outer.roots(), inner);
}

RootSet iterative_roots(const PrimeField& F, const SeriesPoly& Q_in, std::size_t d, std::uint64_t seed) {
    require_solvable(Q_in, d);
    const SeriesPoly Q = Q_in.truncated(d);
    const RootSet outer = precision1_roots(F, Q, seed);
    if (d == 1) return outer;

    std::vector<RootSet> inner;
    inner.reserve(outer.size());
    for (const Root& r : outer) {
        inner.push_back(solve_shift(F, Q, r, d, [&](const SeriesPoly& P, std::size_t k) {
            return iterative_roots(F, P, k, seed);
        }));
    }
    return compose(outer.roots(), inner);
}

RootSet series_roots_trc(const PrimeField& F, const SeriesPoly& Q_in, std::size_t d, const SolverConfig& cfg) {
    require_solvable(Q_in, d);
    const SeriesPoly Q = Q_in.truncated(d);
    if (d == 1) return precision1_roots(F, Q, cfg.seed);

    const std::size_t h = half_up(d);
    const RootSet outer = series_roots_trc(F, Q.truncated(h), h, cfg);
    if (outer.empty()) return outer;

    std::vector<ShiftRequest> requests;
    requests.reserve(outer.size());
    for (const Root& r : outer) requests.push_back({r.f, r.t(), r.m});
    const auto factors = affine_fac_of_shifts(F, d, Q, requests);

    std::vector<RootSet> inner;
    inner.reserve(outer.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const AffineFactorPair& A = factors[i];
        if (A.vanishes()) {
            inner.push_back(RootSet({Root::whole_space(outer[i].m)}));
            continue;
        }
        const std::size_t rest = d - A.valuation;
        if (A.factor.degree() == 0) {
            inner.emplace_back();  // unit shift: the branch dies
            continue;
        }
        if (cfg.linear_shortcut) {
            if (auto r = linear_factor_shortcut(F, A, rest)) {
                inner.push_back(RootSet({std::move(*r)}));
                continue;
            }
        }
        inner.push_back(series_roots_trc(F, A.factor, rest, cfg));
    }
    return compose(outer.roots(), inner);
}

RootSet series_roots(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const SolverConfig& cfg) {
    if (d < 1) throw std::invalid_argument("precision must be >= 1");
    if (Q.prec() < d) throw std::invalid_argument("polynomial known below the requested precision");
    const SeriesPoly Qd = Q.truncated(d);
    if (Qd.is_zero()) return RootSet({Root::whole_space(0)});

    const StrippedPoly st = strip_valuation(Qd, d);
    const std::size_t k = d - st.valuation;
    switch (cfg.algorithm) {
        case Algorithm::dnc_reference: return dnc_series_roots(F, st.poly, k, cfg.seed);
        case Algorithm::iterative_reference: return iterative_roots(F, st.poly, k, cfg.seed);
        case Algorithm::fast: break;
    }
    return series_roots_trc(F, st.poly, k, cfg);
}

std::optional<Root> linear_factor_shortcut(const PrimeField& F, const AffineFactorPair& A,
                                           std::size_t remaining_precision) {
    if (A.factor.degree() != 1) return std::nullopt;
    if (remaining_precision == 0) throw std::invalid_argument("remaining precision must be >= 1");
    Root r{std::vector<Fp>(remaining_precision), 1};
    const auto a0 = A.factor.coeff(0);
    for (std::size_t i = 0; i < remaining_precision && i < a0.size(); ++i) r.f[i] = F.neg(a0[i]);
    return r;
}

TruncSeries newton_lift(const PrimeField& F, const SeriesPoly& Q, Fp y0, std::size_t d) {
    if (d == 0) throw std::invalid_argument("precision must be >= 1");
    if (Q.prec() < d) throw std::invalid_argument("polynomial known below the requested precision");
    const SeriesPoly dQ = derivative_y(F, Q);
    if (poly_eval(F, eval_x0(Q), y0) != F.zero()) throw std::domain_error("not a root of Q(x=0)");
    if (dQ.is_zero() || poly_eval(F, eval_x0(dQ), y0) == F.zero()) throw std::domain_error("not a simple root");

    TruncSeries f = TruncSeries::constant(y0, 1);
    for (std::size_t k = 1; k < d;) {
        k = std::min(2 * k, d);
        const TruncSeries fk = TruncSeries::from_poly(f.coeffs(), k);
        const TruncSeries num = evaluate(F, Q, fk.coeffs(), k);
        const TruncSeries den = evaluate(F, dQ, fk.coeffs(), k);
        f = series_sub(F, fk, series_mul(F, num, series_inv(F, den)));
    }
    return f;
}

}  // namespace sroots
