#pragma once

#include "sroots/series.hpp"

#include <span>
#include <string>
#include <vector>

namespace sroots {

/// Largest p^d any enumeration (expansion or brute force) will attempt.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// One coset f + x^t K[[x]] of roots, with an asserted multiplicity m.
/// `f` always holds exactly t coefficients c_0 .. c_(t-1). The pair (0, 0)
/// stands for the whole of K[[x]]; its m is 0 unless a solver carries a
/// parent multiplicity through it.
struct Root {
    std::vector<Fp> f;
    std::size_t m = 0;

    std::size_t t() const noexcept { return f.size(); }
    bool is_whole_space() const noexcept { return f.empty(); }

    static Root whole_space(std::size_t m = 0) { return Root{{}, m}; }

    friend bool operator==(const Root&, const Root&) = default;
};

/// Canonical order: ascending t, then coefficient sequence of f.
bool canonical_less(const Root& a, const Root& b);

/// Finite list of roots kept sorted canonically, without duplicate (f, t)
/// pairs (the largest m wins).
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(std::vector<Root> roots);

    static RootSet whole_space() { return RootSet({Root::whole_space()}); }

    std::span<const Root> roots() const noexcept { return roots_; }
    std::size_t size() const noexcept { return roots_.size(); }
    bool empty() const noexcept { return roots_.empty(); }
    auto begin() const noexcept { return roots_.begin(); }
    auto end() const noexcept { return roots_.end(); }
    const Root& operator[](std::size_t i) const { return roots_[i]; }

    /// Same (f, t) pairs, multiplicities ignored.
    bool same_pairs(const RootSet& other) const;

    friend bool operator==(const RootSet&, const RootSet&) = default;

private:
    std::vector<Root> roots_;
};

/// A residue modulo x^d: exactly d coefficients.
using Residue = std::vector<Fp>;

/// Sorted, duplicate-free set of residues modulo x^precision.
struct ResidueSet {
    std::size_t precision = 0;
    std::vector<Residue> residues;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

/// Every residue modulo x^d lying in some coset of rs. Requires t <= d for
/// all roots and p^d <= kEnumerationLimit ("expansion too large" otherwise).
ResidueSet expand(const PrimeField& F, const RootSet& rs, std::size_t d);

/// Q(f) = 0 mod x^d.
bool membership(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f, std::size_t d);

/// Multiplicity of c_(t-1) as a root of R_(|x=0), where R is
/// Q(g + x^(t-1) y) with its x-valuation removed and g = f mod x^(t-1).
/// Throws std::domain_error("precision exhausted") when that shift vanishes
/// at Q's precision.
std::size_t root_multiplicity(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f);

/// Verdict of a root-set check; `reason` names the first violated condition.
struct CheckResult {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

CheckResult check_basic_root_set(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const RootSet& rs);

/// Basic-set check followed by the three multiplicity conditions, evaluated
/// on Q read as an exact polynomial (its zero-padded lift).
CheckResult check_reduced_root_set(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const RootSet& rs);

inline bool is_basic_root_set(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const RootSet& rs) {
    return check_basic_root_set(F, Q, d, rs).ok;
}
inline bool is_reduced_root_set(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const RootSet& rs) {
    return check_reduced_root_set(F, Q, d, rs).ok;
}

/// Combines outer roots (f_i, t_i) with the root sets of their shifts:
/// (f_i + x^(t_i) f_ij, t_i + t_ij, m_ij). A whole-space inner root keeps the
/// outer root unchanged. inner[i] belongs to outer[i].
RootSet compose(std::span<const Root> outer, std::span<const RootSet> inner);

/// Text form "t=<t> m=<m> f=<c0> <c1> ...", one root per line.
std::string format_root(const Root& r);

}  // namespace sroots
