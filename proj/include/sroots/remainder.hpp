#pragma once

#include "sroots/series.hpp"

#include <vector>

namespace sroots {

/// R(y + y0) at the precision of R (y0 is truncated to it).
///
/// Uses the factorial convolution when p exceeds deg R, and Horner's rule
/// otherwise (the convolution divides by j! for j <= deg R).
SeriesPoly taylor_shift(const PrimeField& F, const SeriesPoly& R, const TruncSeries& y0);

/// Horner-only Taylor shift; valid for every p.
SeriesPoly taylor_shift_horner(const PrimeField& F, const SeriesPoly& R, const TruncSeries& y0);

/// Binary product tree over monic moduli, balanced by modulus count.
/// levels()[0] are the leaves; each higher node is the product of two
/// children (an unpaired node is carried up unchanged).
class SubproductTree {
public:
    SubproductTree(const PrimeField& F, std::vector<SeriesPoly> leaves);

    const SeriesPoly& root() const { return levels_.back().front(); }
    const std::vector<std::vector<SeriesPoly>>& levels() const noexcept { return levels_; }

    /// P rem leaf_i for every leaf, by descending the tree.
    std::vector<SeriesPoly> remainders(const PrimeField& F, const SeriesPoly& P) const;

private:
    // Transforms of the reversed children of a node, kept from the product
    // that built it so the descent can reuse them.
    struct ChildSpectra {
        std::size_t len = 0;
        ntt::Spectrum rev[2];
    };
    std::vector<std::vector<SeriesPoly>> levels_;
    std::vector<std::vector<ChildSpectra>> spectra_;
};

/// P rem moduli[i] for all i. Moduli must be monic and share P's precision.
std::vector<SeriesPoly> multi_rem(const PrimeField& F, const SeriesPoly& P, const std::vector<SeriesPoly>& moduli);

/// One (A, f, x^t) request for shifted_rem: compute P(f + x^t y) rem A.
struct ShiftedModulus {
    SeriesPoly modulus;
    TruncSeries center;
    std::size_t x_power;
};

/// Simultaneous remainders P(f_i + x^(t_i) y) rem A_i without expanding the
/// shifts: each A_i is rescaled to A_i-bar (coefficient j times
/// x^(t_i (deg A_i - j))), recentred to A_i-bar(y - f_i), all of P's
/// remainders are taken at once through a subproduct tree, and each is
/// mapped back by the substitution y -> f_i + x^(t_i) y.
std::vector<SeriesPoly> shifted_rem(const PrimeField& F, const SeriesPoly& P,
                                    const std::vector<ShiftedModulus>& requests);

}  // namespace sroots
