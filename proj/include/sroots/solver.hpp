#pragma once

#include "sroots/affine.hpp"
#include "sroots/rootset.hpp"

#include <cstdint>
#include <optional>

namespace sroots {

enum class Algorithm { fast, dnc_reference, iterative_reference };

struct SolverConfig {
    std::uint64_t seed = 0;
    bool linear_shortcut = true;
    Algorithm algorithm = Algorithm::fast;
};

/// Roots y_i of Q(x=0) as (y_i, 1, m_i). Throws std::domain_error when
/// Q(x=0) is zero.
RootSet precision1_roots(const PrimeField& F, const SeriesPoly& Q, std::uint64_t seed = 0);

/// Divide and conquer with explicit shifts Q(f + x^t y) mod x^d.
/// Needs Q(x=0) != 0 and Q known at precision >= d.
RootSet dnc_series_roots(const PrimeField& F, const SeriesPoly& Q, std::size_t d, std::uint64_t seed = 0);

/// One x-digit at a time (Roth-Ruckenstein). Same contract as dnc.
RootSet iterative_roots(const PrimeField& F, const SeriesPoly& Q, std::size_t d, std::uint64_t seed = 0);

/// Fast solver: recursion on Q mod x^ceil(d/2), then affine factors of all
/// shifts at once, then recursion on each factor at precision d - s_i.
RootSet series_roots_trc(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const SolverConfig& cfg = {});

/// Top level: any Q known at precision >= d. Q = 0 mod x^d gives the whole
/// space {(0, 0, 0)}; otherwise the x-valuation is stripped first.
RootSet series_roots(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const SolverConfig& cfg = {});

/// If the factor is y - a(x), its single root (a mod x^r, r, 1) with
/// r = remaining_precision.
std::optional<Root> linear_factor_shortcut(const PrimeField& F, const AffineFactorPair& A,
                                           std::size_t remaining_precision);

/// Newton lift of a simple root y0 of Q(x=0) to the unique root of Q modulo
/// x^d. Throws std::domain_error if y0 is not a simple root.
TruncSeries newton_lift(const PrimeField& F, const SeriesPoly& Q, Fp y0, std::size_t d);

}  // namespace sroots
