#include "sroots/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sroots {

std::uint64_t residue_count(const PrimeField& F, std::size_t d) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        n *= F.modulus();
        if (n > kEnumerationLimit) return kEnumerationLimit + 1;
    }
    return n;
}

ResidueSet brute_force_roots(const PrimeField& F, const SeriesPoly& Q, std::size_t d) {
    const std::uint64_t total = residue_count(F, d);
    if (total > kEnumerationLimit) throw std::length_error("instance too large for oracle");
    if (Q.prec() < d) throw std::invalid_argument("polynomial known below the requested precision");

    ResidueSet out{d, {}};
    Residue f(d);
    for (std::uint64_t index = 0; index < total; ++index) {
        std::uint64_t rest = index;
        for (std::size_t i = 0; i < d; ++i) {
            f[i] = Fp{static_cast<std::uint32_t>(rest % F.modulus())};
            rest /= F.modulus();
        }
        if (membership(F, Q, f, d)) out.residues.push_back(f);
    }
    std::sort(out.residues.begin(), out.residues.end());
    return out;
}

bool agree(const PrimeField& F, const RootSet& rs, const SeriesPoly& Q, std::size_t d) {
    return expand(F, rs, d) == brute_force_roots(F, Q, d);
}

}  // namespace sroots
