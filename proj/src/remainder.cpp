#include "sroots/remainder.hpp"

#include <stdexcept>

namespace sroots {

namespace {

constexpr int kConvolutionShiftCutoff = 8;

void require_monic_moduli(const SeriesPoly& P, const std::vector<SeriesPoly>& moduli) {
    for (const auto& m : moduli) {
        if (!m.is_monic()) throw std::domain_error("non-monic modulus");
        if (m.prec() != P.prec()) throw std::invalid_argument("modulus precision differs from dividend");
    }
}

SeriesPoly taylor_shift_convolution(const PrimeField& F, const SeriesPoly& R, const TruncSeries& y0) {
    const std::size_t k = R.prec();
    const std::size_t n = static_cast<std::size_t>(R.degree());

    std::vector<Fp> fact(n + 1), inv_fact(n + 1);
    fact[0] = F.one();
    for (std::size_t j = 1; j <= n; ++j) fact[j] = F.mul(fact[j - 1], F.from_uint(j));
    inv_fact[n] = F.inv(fact[n]);
    for (std::size_t j = n; j > 0; --j) inv_fact[j - 1] = F.mul(inv_fact[j], F.from_uint(j));

    // u_(n-j) = j! R_j, v_i = y0^i / i!; then row m of the shift is
    // (1/m!) * (u * v)_(n-m).
    std::vector<Fp> u((n + 1) * k), v((n + 1) * k);
    for (std::size_t j = 0; j <= n; ++j) {
        const auto row = R.coeff(j);
        for (std::size_t i = 0; i < k; ++i) u[(n - j) * k + i] = F.mul(row[i], fact[j]);
    }
    TruncSeries power = TruncSeries::constant(F.one(), k);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t c = 0; c < k; ++c) v[i * k + c] = F.mul(power[c], inv_fact[i]);
        if (i < n) power = series_mul(F, power, y0);
    }
    const SeriesPoly w = mul_low(F, SeriesPoly(k, std::move(u)), SeriesPoly(k, std::move(v)), n + 1);

    std::vector<Fp> out((n + 1) * k);
    for (std::size_t m = 0; m <= n; ++m) {
        for (std::size_t c = 0; c < k; ++c) out[m * k + c] = F.mul(w.at(n - m, c), inv_fact[m]);
    }
    return SeriesPoly(k, std::move(out));
}

}  // namespace

SeriesPoly taylor_shift_horner(const PrimeField& F, const SeriesPoly& R, const TruncSeries& y0_in) {
    const std::size_t k = R.prec();
    if (R.degree() <= 0) return R;
    const TruncSeries y0 = y0_in.prec() == k ? y0_in : TruncSeries::from_poly(y0_in.coeffs(), k);
    const std::size_t n = static_cast<std::size_t>(R.degree());
    std::vector<Fp> acc((n + 1) * k);
    // acc holds the partial Horner value with rows 0..len-1.
    std::size_t len = 0;
    for (std::size_t j = n + 1; j-- > 0;) {
        // acc <- acc * (y + y0) + R_j
        if (len > 0) {
            for (std::size_t r = len; r-- > 0;) {
                const auto prod = series_mul(F, TruncSeries(std::vector<Fp>(acc.begin() + static_cast<std::ptrdiff_t>(r * k),
                                                                            acc.begin() + static_cast<std::ptrdiff_t>((r + 1) * k))),
                                             y0);
                for (std::size_t c = 0; c < k; ++c) {
                    acc[(r + 1) * k + c] = F.add(acc[(r + 1) * k + c], acc[r * k + c]);
                    acc[r * k + c] = prod[c];
                }
            }
        }
        ++len;
        const auto row = R.coeff(j);
        for (std::size_t c = 0; c < k; ++c) acc[c] = F.add(acc[c], row[c]);
    }
    return SeriesPoly(k, std::move(acc));
}

SeriesPoly taylor_shift(const PrimeField& F, const SeriesPoly& R, const TruncSeries& y0) {
    if (R.degree() <= 0 || y0.is_zero()) return R;
    const bool factorials_invertible = static_cast<std::uint64_t>(R.degree()) < F.modulus();
    if (factorials_invertible && R.degree() >= kConvolutionShiftCutoff) {
        return taylor_shift_convolution(F, R, TruncSeries::from_poly(y0.coeffs(), R.prec()));
    }
    return taylor_shift_horner(F, R, y0);
}

// Above this degree the descent carries the fractions R/N in z = 1/y (row b
// of U stands for z^(b+1), truncated after z^deg N) instead of dividing at
// every node: the child fraction sits in the middle rows of N_sibling * U,
// and the remainder is recovered as the polynomial part of N * U. Small
// nodes go back to plain division, which is cheaper there.
constexpr std::size_t kScaledRootMinDegree = 64;
constexpr std::size_t kScaledNodeMinDegree = 8;
// below this many coefficient products mul stays off the transforms
constexpr std::size_t kSpectralNodeMinWork = 16384;

SubproductTree::SubproductTree(const PrimeField& F, std::vector<SeriesPoly> leaves) {
    if (leaves.empty()) throw std::invalid_argument("subproduct tree needs at least one modulus");
    const std::size_t k = leaves.front().prec();
    levels_.push_back(std::move(leaves));
    spectra_.emplace_back(levels_.back().size());
    std::size_t total = 0;
    while (levels_.back().size() > 1) {
        const auto& below = levels_.back();
        std::vector<SeriesPoly> above;
        std::vector<ChildSpectra> spec((below.size() + 1) / 2);
        above.reserve(spec.size());
        for (std::size_t i = 0; i + 1 < below.size(); i += 2) {
            const std::size_t da = static_cast<std::size_t>(below[i].degree());
            const std::size_t db = static_cast<std::size_t>(below[i + 1].degree());
            const std::size_t dp = da + db;
            if (dp <= kScaledNodeMinDegree || (da + 1) * (db + 1) * k * k <= kSpectralNodeMinWork) {
                above.push_back(mul(F, below[i], below[i + 1]));
                continue;
            }
            // rev(N_a N_b) = rev(N_a) rev(N_b) for monic factors
            ChildSpectra& cs = spec[i / 2];
            cs.len = kronecker_length(k, dp + 1);
            cs.rev[0] = kronecker_spectrum(F, reverse_rows(below[i], da + 1), cs.len);
            cs.rev[1] = kronecker_spectrum(F, reverse_rows(below[i + 1], db + 1), cs.len);
            above.push_back(reverse_rows(kronecker_rows(F, cs.rev[0], cs.rev[1], k, 0, dp + 1), dp + 1));
            total += cs.len;
        }
        if (below.size() % 2 == 1) above.push_back(below.back());
        levels_.push_back(std::move(above));
        spectra_.push_back(std::move(spec));
    }
    // only the scaled descent reads them
    if (static_cast<std::size_t>(root().degree()) < kScaledRootMinDegree && total > 0)
        for (auto& level : spectra_) level.assign(level.size(), ChildSpectra{});
}

std::vector<SeriesPoly> SubproductTree::remainders(const PrimeField& F, const SeriesPoly& P) const {
    const std::size_t cutoff = kScaledNodeMinDegree;
    const SeriesPoly& top = root();
    const std::size_t k = top.prec();
    const std::size_t D = static_cast<std::size_t>(top.degree());
    const SeriesPoly R = rem_monic(F, P, top);

    // Entries are either a remainder or (when scaled[i]) a fraction U.
    std::vector<SeriesPoly> current;
    std::vector<char> scaled;
    if (D >= kScaledRootMinDegree) {
        const SeriesPoly inv = inverse_mod_y_power(F, reverse_rows(top, D + 1), D);
        current.push_back(mul_low(F, reverse_rows(R, D), inv, D));
        scaled.push_back(1);
    } else {
        current.push_back(R);
        scaled.push_back(0);
    }

    auto unscale = [&F](const SeriesPoly& N, const SeriesPoly& U) {
        const std::size_t dn = static_cast<std::size_t>(N.degree());
        if (dn == 0) return SeriesPoly(U.prec());
        return reverse_rows(mul_low(F, reverse_rows(N, dn + 1), U, dn), dn);
    };

    for (std::size_t h = levels_.size() - 1; h-- > 0;) {
        const auto& nodes = levels_[h];
        std::vector<SeriesPoly> next(nodes.size(), SeriesPoly(k));
        std::vector<char> next_scaled(nodes.size(), 0);
        auto place = [&](std::size_t i, SeriesPoly U) {
            if (static_cast<std::size_t>(nodes[i].degree()) > cutoff) {
                next[i] = std::move(U);
                next_scaled[i] = 1;
            } else {
                next[i] = unscale(nodes[i], U);
            }
        };
        for (std::size_t j = 0; j < current.size(); ++j) {
            const std::size_t c0 = 2 * j, c1 = 2 * j + 1;
            const SeriesPoly& up = current[j];
            if (c1 >= nodes.size()) {  // carried up unchanged
                next[c0] = up;
                next_scaled[c0] = scaled[j];
                continue;
            }
            if (!scaled[j]) {
                next[c0] = rem_monic(F, up, nodes[c0]);
                next[c1] = rem_monic(F, up, nodes[c1]);
                continue;
            }
            const std::size_t d0 = static_cast<std::size_t>(nodes[c0].degree());
            const std::size_t d1 = static_cast<std::size_t>(nodes[c1].degree());
            const ChildSpectra& cs = spectra_[h + 1][j];
            if (cs.len) {
                // the wrap modulo the transform length only reaches rows below d0, d1
                const ntt::Spectrum su = kronecker_spectrum(F, up, cs.len);
                place(c0, kronecker_rows(F, cs.rev[1], su, k, d1, d0));
                place(c1, kronecker_rows(F, cs.rev[0], su, k, d0, d1));
            } else {
                place(c0, mul_rows(F, reverse_rows(nodes[c1], d1 + 1), up, d1, d0));
                place(c1, mul_rows(F, reverse_rows(nodes[c0], d0 + 1), up, d0, d1));
            }
        }
        current = std::move(next);
        scaled = std::move(next_scaled);
    }

    const auto& leaves = levels_.front();
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (scaled[i]) current[i] = unscale(leaves[i], current[i]);
    return current;
}

std::vector<SeriesPoly> multi_rem(const PrimeField& F, const SeriesPoly& P, const std::vector<SeriesPoly>& moduli) {
    require_monic_moduli(P, moduli);
    if (moduli.empty()) return {};
    if (moduli.size() <= 2) {
        std::vector<SeriesPoly> out;
        out.reserve(moduli.size());
        for (const auto& m : moduli) out.push_back(rem_monic(F, P, m));
        return out;
    }
    return SubproductTree(F, moduli).remainders(F, P);
}

std::vector<SeriesPoly> shifted_rem(const PrimeField& F, const SeriesPoly& P,
                                    const std::vector<ShiftedModulus>& requests) {
    const std::size_t k = P.prec();
    std::vector<SeriesPoly> recentred;
    recentred.reserve(requests.size());
    for (const auto& req : requests) {
        if (!req.modulus.is_monic()) throw std::domain_error("non-monic modulus");
        if (req.modulus.prec() != k) throw std::invalid_argument("modulus precision differs from dividend");
        const std::size_t delta = static_cast<std::size_t>(req.modulus.degree());
        std::vector<Fp> rescaled((delta + 1) * k);
        for (std::size_t j = 0; j <= delta; ++j) {
            const std::size_t shift = req.x_power * (delta - j);
            if (shift >= k) continue;
            const auto src = req.modulus.coeff(j);
            std::copy_n(src.begin(), k - shift, rescaled.begin() + static_cast<std::ptrdiff_t>(j * k + shift));
        }
        const TruncSeries center = TruncSeries::from_poly(req.center.coeffs(), k);
        recentred.push_back(taylor_shift(F, SeriesPoly(k, std::move(rescaled)), series_neg(F, center)));
    }

    const auto partial = multi_rem(F, P, recentred);

    std::vector<SeriesPoly> out;
    out.reserve(requests.size());
    for (std::size_t i = 0; i < requests.size(); ++i) {
        const TruncSeries center = TruncSeries::from_poly(requests[i].center.coeffs(), k);
        out.push_back(scale_y_by_x_power(taylor_shift(F, partial[i], center), requests[i].x_power));
    }
    return out;
}

}  // namespace sroots
