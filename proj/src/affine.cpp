#include "sroots/affine.hpp"

#include "sroots/remainder.hpp"

#include <bit>
#include <stdexcept>

namespace sroots {

namespace {

// Coefficient of x^e in Q, as a polynomial in y.
DensePoly x_slice(const SeriesPoly& Q, std::size_t e) {
    std::vector<Fp> c(Q.rows());
    for (std::size_t j = 0; j < Q.rows(); ++j) c[j] = Q.coeff(j)[e];
    return DensePoly(std::move(c));
}

SeriesPoly assemble(const std::vector<DensePoly>& slices, std::size_t k) {
    std::size_t rows = 0;
    for (const auto& s : slices) rows = std::max(rows, s.coeffs().size());
    std::vector<Fp> data(rows * k);
    for (std::size_t e = 0; e < slices.size(); ++e) {
        const auto c = slices[e].coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) data[j * k + e] = c[j];
    }
    return SeriesPoly(k, std::move(data));
}

struct LiftState {
    std::size_t index;
    SeriesPoly factor;
    SeriesPoly cofactor_inverse;
    std::size_t valuation;
    std::size_t prec;
    SeriesPoly pending{1};  // Q(f + x^t y) rem A-bar, at least to x^(s + 2K)
};

}  // namespace

AffineFactorization affine_factor_reference(const PrimeField& F, const SeriesPoly& Q_in, std::size_t k) {
    if (Q_in.prec() < k) throw std::invalid_argument("polynomial known below the requested precision");
    const SeriesPoly Q = Q_in.truncated(k);
    const DensePoly q0 = eval_x0(Q);
    if (q0.is_zero()) throw std::domain_error("zero reduction");

    const Fp b0 = q0.lead();
    const Fp b0_inv = F.inv(b0);
    std::vector<DensePoly> a{poly_scale(F, q0, b0_inv)};
    std::vector<DensePoly> b{DensePoly(std::vector<Fp>{b0})};
    for (std::size_t e = 1; e < k; ++e) {
        DensePoly rhs = x_slice(Q, e);
        for (std::size_t i = 1; i < e; ++i) rhs = poly_sub(F, rhs, poly_mul(F, a[i], b[e - i]));
        // rhs = a_0 b_e + b_0 a_e with deg a_e < deg a_0.
        PolyDivRem qr = poly_divrem(F, rhs, a[0]);
        b.push_back(std::move(qr.quotient));
        a.push_back(poly_scale(F, qr.remainder, b0_inv));
    }
    return {assemble(a, k), assemble(b, k)};
}

std::vector<AffineFactorPair> affine_fac_of_shifts(const PrimeField& F, std::size_t d, const SeriesPoly& Q_in,
                                                   const std::vector<ShiftRequest>& requests) {
    if (d == 0) throw std::invalid_argument("precision must be >= 1");
    if (Q_in.prec() < d) throw std::invalid_argument("polynomial known below the requested precision");
    const SeriesPoly Q = Q_in.truncated(d);
    if (eval_x0(Q).is_zero()) throw std::domain_error("zero reduction");

    std::vector<AffineFactorPair> out(requests.size(), AffineFactorPair{SeriesPoly(1), d});
    std::vector<TruncSeries> centers;
    centers.reserve(requests.size());
    for (const auto& r : requests) {
        if (r.f.size() > r.t) throw std::invalid_argument("shift center has more than t coefficients");
        centers.push_back(TruncSeries::from_poly(r.f, d));
    }

    // Initialisation: valuations and factors modulo x.
    std::vector<ShiftedModulus> init;
    init.reserve(requests.size());
    for (std::size_t i = 0; i < requests.size(); ++i) {
        init.push_back({SeriesPoly::monomial(requests[i].m + 1, d), centers[i], requests[i].t});
    }
    const auto low = shifted_rem(F, Q, init);

    std::vector<LiftState> alive;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        if (low[i].is_zero()) continue;  // shift vanishes mod x^d: (0, d)
        const std::size_t s = x_valuation(low[i]);
        const DensePoly head = eval_x0(divide_by_x_power(low[i], s));
        const Fp c = F.inv(head.lead());
        SeriesPoly factor = SeriesPoly::from_dense(poly_scale(F, head, c), 1);
        if (factor.degree() == 0 || d - s == 1) {
            out[i] = {factor.lifted(d - s), s};
            continue;
        }
        alive.push_back({i, std::move(factor), SeriesPoly::monomial(0, 1, c), s, 1, SeriesPoly(1)});
    }

    // Round k only looks at the shifts modulo x^(s_i + 2K). The remainder by
    // the squared factor is taken one doubling further, so that reducing it
    // modulo the new factor hands the next round its first batch for free.
    const unsigned rounds = static_cast<unsigned>(std::bit_width(d - 1));  // ceil(log2 d)
    for (unsigned k = 1; k <= rounds && !alive.empty(); ++k) {
        const std::size_t K = std::size_t{1} << (k - 1);
        std::vector<LiftState> next;
        for (auto& st : alive) {
            if (d - st.valuation <= K) {
                out[st.index] = {std::move(st.factor), st.valuation};
            } else {
                next.push_back(std::move(st));
            }
        }
        alive = std::move(next);
        if (alive.empty()) break;

        // Lift the factors to precision K + delta_i.
        std::size_t e = 0, e_next = 0;
        for (const auto& st : alive) {
            e = std::max(e, std::min(d, st.valuation + 2 * K));
            e_next = std::max(e_next, std::min(d, st.valuation + 4 * K));
        }
        if (k == 1) {
            std::vector<ShiftedModulus> batch;
            batch.reserve(alive.size());
            for (const auto& st : alive)
                batch.push_back({st.factor.lifted(e), centers[st.index].truncated(e), requests[st.index].t});
            auto rem_a = shifted_rem(F, Q.truncated(e), batch);
            for (std::size_t j = 0; j < alive.size(); ++j) alive[j].pending = std::move(rem_a[j]);
        }
        for (auto& st : alive) {
            const std::size_t delta = std::min(K, d - st.valuation - K);
            const SeriesPoly& rem_a = st.pending;
            if (rem_a.prec() < st.valuation + K + delta || x_valuation(rem_a) < st.valuation + K)
                throw std::logic_error("affine factor lift: remainder not divisible by x^(s+K)");
            const SeriesPoly top = divide_by_x_power(rem_a, st.valuation + K).truncated(delta);
            const SeriesPoly correction =
                rem_monic(F, mul(F, top, st.cofactor_inverse.truncated(delta)), st.factor.truncated(delta));
            st.factor = add(F, st.factor.lifted(K + delta), multiply_by_x_power(correction.lifted(K + delta), K));
            st.prec = K + delta;
        }

        // Refresh the cofactor inverses at precision K + delta_i.
        std::vector<ShiftedModulus> batch;
        batch.reserve(alive.size());
        for (const auto& st : alive) {
            const SeriesPoly lifted = st.factor.lifted(e_next);
            batch.push_back({mul(F, lifted, lifted), centers[st.index].truncated(e_next), requests[st.index].t});
        }
        const auto rem_aa = shifted_rem(F, Q.truncated(e_next), batch);
        for (std::size_t j = 0; j < alive.size(); ++j) {
            auto& st = alive[j];
            if (x_valuation(rem_aa[j]) < st.valuation)
                throw std::logic_error("affine factor lift: square remainder below the shift valuation");
            const SeriesPoly reduced = divide_by_x_power(rem_aa[j], st.valuation).truncated(st.prec);
            const SeriesPoly cofactor_rem = divrem_monic(F, reduced, st.factor).quotient;
            st.cofactor_inverse = invert_mod(F, cofactor_rem, st.factor, st.prec);
            if (st.prec != std::min(std::size_t{1} << k, d - st.valuation))
                throw std::logic_error("affine factor lift: precision bookkeeping mismatch");
            st.pending = rem_monic(F, rem_aa[j], st.factor.lifted(e_next));
        }
    }
    for (auto& st : alive) {
        if (st.prec != d - st.valuation) throw std::logic_error("affine factor lift ended early");
        out[st.index] = {std::move(st.factor), st.valuation};
    }
    return out;
}

}  // namespace sroots
