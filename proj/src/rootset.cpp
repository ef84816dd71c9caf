#include "sroots/rootset.hpp"

#include "sroots/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sroots {

bool canonical_less(const Root& a, const Root& b) {
    if (a.t() != b.t()) return a.t() < b.t();
    return a.f < b.f;
}

RootSet::RootSet(std::vector<Root> roots) : roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
        if (canonical_less(a, b)) return true;
        if (canonical_less(b, a)) return false;
        return a.m > b.m;
    });
    roots_.erase(std::unique(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) { return a.f == b.f; }),
                 roots_.end());
}

bool RootSet::same_pairs(const RootSet& other) const {
    return std::equal(roots_.begin(), roots_.end(), other.roots_.begin(), other.roots_.end(),
                      [](const Root& a, const Root& b) { return a.f == b.f; });
}

ResidueSet expand(const PrimeField& F, const RootSet& rs, std::size_t d) {
    if (residue_count(F, d) > kEnumerationLimit) throw std::length_error("expansion too large");
    ResidueSet out{d, {}};
    for (const Root& r : rs) {
        if (r.t() > d) throw std::invalid_argument("root carries more digits than the precision");
        const std::uint64_t free_count = residue_count(F, d - r.t());
        Residue f(d);
        std::copy(r.f.begin(), r.f.end(), f.begin());
        for (std::uint64_t index = 0; index < free_count; ++index) {
            std::uint64_t rest = index;
            for (std::size_t i = r.t(); i < d; ++i) {
                f[i] = Fp{static_cast<std::uint32_t>(rest % F.modulus())};
                rest /= F.modulus();
            }
            out.residues.push_back(f);
        }
    }
    std::sort(out.residues.begin(), out.residues.end());
    out.residues.erase(std::unique(out.residues.begin(), out.residues.end()), out.residues.end());
    return out;
}

bool membership(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f, std::size_t d) {
    return evaluate(F, Q, f, d).is_zero();
}

std::size_t root_multiplicity(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f) {
    if (f.empty()) throw std::invalid_argument("root multiplicity needs t >= 1");
    const std::size_t t = f.size();
    const SeriesPoly shifted = shift_y(F, Q, f.first(t - 1), t - 1, Q.prec());
    const std::size_t s = x_valuation(shifted);
    if (s >= Q.prec()) throw std::domain_error("precision exhausted");
    return multiplicity_at(F, eval_x0(divide_by_x_power(shifted, s)), f[t - 1]);
}

CheckResult check_basic_root_set(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const RootSet& rs) {
    if (Q.prec() < d) throw std::invalid_argument("polynomial known below the requested precision");
    if (residue_count(F, d) > kEnumerationLimit) throw std::length_error("expansion too large");
    for (const Root& r : rs) {
        if (r.t() > d) return {false, "root has t > d: " + format_root(r)};
        const SeriesPoly shifted = shift_y(F, Q, r.f, r.t(), d);
        if (!shifted.is_zero()) {
            return {false, "basic property 1 (val_x(Q(f + x^t y)) >= d) violated: val = " +
                               std::to_string(x_valuation(shifted)) + " < d = " + std::to_string(d) + " for " +
                               format_root(r)};
        }
    }
    if (expand(F, rs, d) != brute_force_roots(F, Q, d)) {
        return {false, "basic property 2 (union of cosets equals the roots to precision d) violated"};
    }
    return {};
}

CheckResult check_reduced_root_set(const PrimeField& F, const SeriesPoly& Q, std::size_t d, const RootSet& rs) {
    const DensePoly q0 = eval_x0(Q);
    if (q0.is_zero()) throw std::domain_error("reduced root sets need Q(x=0) != 0");
    if (CheckResult basic = check_basic_root_set(F, Q, d, rs); !basic) return basic;

    std::size_t max_t = 0;
    for (const Root& r : rs) max_t = std::max(max_t, r.t());
    const std::size_t n = Q.degree() < 0 ? 0 : static_cast<std::size_t>(Q.degree());
    // Exact shifts of the zero-padded lift of Q fit below this precision.
    const SeriesPoly lift = Q.lifted(Q.prec() + n * max_t + 1);

    std::size_t total = 0;
    for (const Root& r : rs) {
        if (r.is_whole_space()) return {false, "reduced condition (1) (m >= 1) fails for whole-space root"};
        const std::size_t m = root_multiplicity(F, lift, r.f);
        if (m < 1) return {false, "reduced condition (1) (m >= 1) violated for " + format_root(r)};
        const SeriesPoly shifted = shift_y(F, lift, r.f, r.t(), lift.prec());
        const std::size_t s = x_valuation(shifted);
        const int shifted_degree = eval_x0(divide_by_x_power(shifted, s)).degree();
        if (shifted_degree > static_cast<int>(m)) {
            return {false, "reduced condition (2) (deg Q_i(x=0) <= m_i) violated: " + std::to_string(shifted_degree) +
                               " > " + std::to_string(m) + " for " + format_root(r)};
        }
        total += m;
    }
    if (total > static_cast<std::size_t>(q0.degree())) {
        return {false, "reduced condition (3) (sum m_i <= deg Q(x=0)) violated: " + std::to_string(total) + " > " +
                           std::to_string(q0.degree())};
    }
    return {};
}

RootSet compose(std::span<const Root> outer, std::span<const RootSet> inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("one inner root set per outer root required");
    std::vector<Root> out;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        for (const Root& sub : inner[i]) {
            if (sub.is_whole_space()) {
                out.push_back(outer[i]);
                continue;
            }
            Root r;
            r.f.reserve(outer[i].t() + sub.t());
            r.f.insert(r.f.end(), outer[i].f.begin(), outer[i].f.end());
            r.f.insert(r.f.end(), sub.f.begin(), sub.f.end());
            r.m = sub.m;
            out.push_back(std::move(r));
        }
    }
    return RootSet(std::move(out));
}

std::string format_root(const Root& r) {
    std::string s = "t=" + std::to_string(r.t()) + " m=" + std::to_string(r.m) + " f=";
    for (Fp c : r.f) s += " " + std::to_string(c.v);
    return s;
}

}  // namespace sroots
