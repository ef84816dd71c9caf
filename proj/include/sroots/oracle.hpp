#pragma once

#include "sroots/rootset.hpp"

namespace sroots {

/// All f with deg_x f < d and Q(f) = 0 mod x^d, by evaluating Q at every
/// residue. Throws std::length_error("instance too large for oracle") when
/// p^d exceeds kEnumerationLimit.
ResidueSet brute_force_roots(const PrimeField& F, const SeriesPoly& Q, std::size_t d);

/// expand(rs, d) == brute_force_roots(Q, d).
bool agree(const PrimeField& F, const RootSet& rs, const SeriesPoly& Q, std::size_t d);

/// p^d, or kEnumerationLimit + 1 if that bound is exceeded.
std::uint64_t residue_count(const PrimeField& F, std::size_t d);

}  // namespace sroots
