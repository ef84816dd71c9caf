#pragma once

#include "sroots/series.hpp"

#include <vector>

namespace sroots {

/// Q = A * B with A monic and B(x=0) a nonzero constant.
struct AffineFactorization {
    SeriesPoly factor;
    SeriesPoly cofactor;
};

/// Affine factor of one shift: `factor` is known at precision d - valuation.
/// The pair (zero polynomial, d) marks a shift that vanishes modulo x^d.
struct AffineFactorPair {
    SeriesPoly factor;
    std::size_t valuation;

    bool vanishes() const noexcept { return factor.is_zero(); }
};

/// A shift request (f, t, m): f has t coefficients, m bounds the degree of
/// the affine factor of the stripped shift Q(f + x^t y) / x^s.
struct ShiftRequest {
    std::vector<Fp> f;
    std::size_t t;
    std::size_t m;
};

/// Coefficient-by-coefficient construction of the affine factorization of
/// Q mod x^k, solving Q = A B one power of x at a time. Quadratic; kept as
/// a reference. Throws std::domain_error("zero reduction") if Q(x=0) = 0.
AffineFactorization affine_factor_reference(const PrimeField& F, const SeriesPoly& Q, std::size_t k);

/// Affine factors of all stripped shifts x^-s_i Q(f_i + x^t_i y), each at
/// precision d - s_i, computed from Q without expanding any shift.
///
/// Factors start at precision 1 from remainders modulo y^(m_i + 1), then
/// each round doubles their precision: the factor is corrected from
/// Q(f_i + x^t_i y) rem A_i, and the cofactor inverse B_i^-1 rem A_i is
/// refreshed from the remainder modulo A_i^2. Each m_i must bound the
/// degree of the corresponding factor.
std::vector<AffineFactorPair> affine_fac_of_shifts(const PrimeField& F, std::size_t d, const SeriesPoly& Q,
                                                   const std::vector<ShiftRequest>& requests);

}  // namespace sroots
