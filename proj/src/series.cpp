#include "sroots/series.hpp"

#include "sroots/ntt.hpp"
#include "sroots/remainder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sroots {

namespace {

constexpr std::size_t kSeriesNaiveCutoff = 64;
// Bivariate products below this many coefficient pairs stay schoolbook.
constexpr std::size_t kBivariateNaiveCutoff = 1u << 14;
// Quotient length times divisor degree above which division goes through
// a Newton inverse of the reversed divisor.
constexpr std::size_t kNewtonDivisionCutoff = 256;

void require_same_prec(const SeriesPoly& a, const SeriesPoly& b) {
    if (a.prec() != b.prec()) throw std::invalid_argument("operands have different precisions");
}

// dst += a * b mod x^dst.size(), naive.
void mul_acc(const PrimeField& F, std::span<Fp> dst, std::span<const Fp> a, std::span<const Fp> b) {
    const std::uint64_t p = F.modulus();
    const std::size_t k = dst.size();
    for (std::size_t i = 0; i < std::min(k, a.size()); ++i) {
        const std::uint64_t ai = a[i].v;
        if (ai == 0) continue;
        const std::size_t lim = std::min(b.size(), k - i);
        for (std::size_t j = 0; j < lim; ++j) {
            dst[i + j] = Fp{static_cast<std::uint32_t>((dst[i + j].v + ai * b[j].v) % p)};
        }
    }
}

// a * b mod x^k into a fresh buffer.
std::vector<Fp> series_product(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b, std::size_t k) {
    a = a.first(std::min(a.size(), k));
    b = b.first(std::min(b.size(), k));
    if (k <= kSeriesNaiveCutoff) {
        std::vector<Fp> out(k);
        mul_acc(F, out, a, b);
        return out;
    }
    auto prod = ntt::multiply(F, a, b);
    prod.resize(k);
    return prod;
}

SeriesDivRem divrem_schoolbook(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    const std::size_t k = a.prec();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::size_t da = static_cast<std::size_t>(a.degree());
    std::vector<Fp> r(a.data().begin(), a.data().end());
    std::vector<Fp> q((da - db + 1) * k);
    std::vector<Fp> neg(k);
    for (std::size_t j = da - db + 1; j-- > 0;) {
        std::span<Fp> lead(r.data() + (j + db) * k, k);
        std::copy(lead.begin(), lead.end(), q.begin() + static_cast<std::ptrdiff_t>(j * k));
        if (std::all_of(lead.begin(), lead.end(), [](Fp v) { return v.v == 0; })) continue;
        for (std::size_t i = 0; i < k; ++i) neg[i] = F.neg(lead[i]);
        for (std::size_t i = 0; i < db; ++i) {
            std::span<Fp> dst(r.data() + (j + i) * k, k);
            if (k <= kSeriesNaiveCutoff) {
                mul_acc(F, dst, neg, b.coeff(i));
            } else {
                const auto prod = series_product(F, neg, b.coeff(i), k);
                for (std::size_t t = 0; t < k; ++t) dst[t] = F.add(dst[t], prod[t]);
            }
        }
        std::fill(lead.begin(), lead.end(), Fp{});
    }
    r.resize(db * k);
    return {SeriesPoly(k, std::move(q)), SeriesPoly(k, std::move(r))};
}

SeriesDivRem divrem_newton(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    const std::size_t da = static_cast<std::size_t>(a.degree());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::size_t qlen = da - db + 1;
    const SeriesPoly rev_b = reverse_rows(b, db + 1);
    const SeriesPoly inv = inverse_mod_y_power(F, rev_b, qlen);
    const SeriesPoly rev_a = reverse_rows(a, da + 1).low_rows(qlen);
    const SeriesPoly rev_q = mul_low(F, rev_a, inv, qlen);
    SeriesPoly q = reverse_rows(rev_q, qlen);
    SeriesPoly r = sub(F, a.low_rows(db), mul_low(F, q, b, db));
    return {std::move(q), std::move(r)};
}

}  // namespace

// ---- TruncSeries ------------------------------------------------------------

TruncSeries::TruncSeries(std::size_t prec) : c_(prec) {
    if (prec == 0) throw std::invalid_argument("series precision must be >= 1");
}

TruncSeries::TruncSeries(std::vector<Fp> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series precision must be >= 1");
}

TruncSeries TruncSeries::from_poly(std::span<const Fp> coeffs, std::size_t prec) {
    TruncSeries s(prec);
    std::copy_n(coeffs.begin(), std::min(prec, coeffs.size()), s.c_.begin());
    return s;
}

TruncSeries TruncSeries::constant(Fp c, std::size_t prec) {
    TruncSeries s(prec);
    s.c_[0] = c;
    return s;
}

std::size_t TruncSeries::valuation() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].v != 0) return i;
    }
    return c_.size();
}

TruncSeries TruncSeries::truncated(std::size_t k) const {
    if (k > prec()) throw std::invalid_argument("truncation cannot raise precision");
    return TruncSeries(std::vector<Fp>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
}

TruncSeries series_add(const PrimeField& F, const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.prec(), b.prec()));
    for (std::size_t i = 0; i < out.prec(); ++i) out[i] = F.add(a[i], b[i]);
    return out;
}

TruncSeries series_sub(const PrimeField& F, const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.prec(), b.prec()));
    for (std::size_t i = 0; i < out.prec(); ++i) out[i] = F.sub(a[i], b[i]);
    return out;
}

TruncSeries series_neg(const PrimeField& F, const TruncSeries& a) {
    TruncSeries out(a.prec());
    for (std::size_t i = 0; i < out.prec(); ++i) out[i] = F.neg(a[i]);
    return out;
}

TruncSeries series_mul(const PrimeField& F, const TruncSeries& a, const TruncSeries& b) {
    return TruncSeries(series_product(F, a.coeffs(), b.coeffs(), std::min(a.prec(), b.prec())));
}

TruncSeries series_inv(const PrimeField& F, const TruncSeries& a) {
    if (a[0].v == 0) throw std::domain_error("non-unit");
    const std::size_t k = a.prec();
    TruncSeries g = TruncSeries::constant(F.inv(a[0]), 1);
    std::size_t have = 1;
    while (have < k) {
        const std::size_t want = std::min(2 * have, k);
        const TruncSeries g_up = TruncSeries::from_poly(g.coeffs(), want);
        TruncSeries e = series_mul(F, a.truncated(want), g_up);
        e = series_sub(F, TruncSeries::constant(F.one(), want), e);
        g = series_add(F, g_up, series_mul(F, g_up, e));
        have = want;
    }
    return g;
}

// ---- SeriesPoly -------------------------------------------------------------

SeriesPoly::SeriesPoly(std::size_t prec) : prec_(prec) {
    if (prec == 0) throw std::invalid_argument("series precision must be >= 1");
}

SeriesPoly::SeriesPoly(std::size_t prec, std::vector<Fp> data) : prec_(prec), data_(std::move(data)) {
    if (prec == 0) throw std::invalid_argument("series precision must be >= 1");
    if (data_.size() % prec != 0) throw std::invalid_argument("coefficient block is not a whole number of rows");
    normalize();
}

SeriesPoly SeriesPoly::from_rows(const PrimeField& F, std::size_t prec,
                                 const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<Fp> data(rows.size() * prec);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t i = 0; i < rows[j].size() && i < prec; ++i) data[j * prec + i] = F.from_int(rows[j][i]);
    }
    return SeriesPoly(prec, std::move(data));
}

SeriesPoly SeriesPoly::from_series(std::span<const TruncSeries> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("from_series needs at least one coefficient");
    const std::size_t prec = coeffs.front().prec();
    std::vector<Fp> data;
    data.reserve(coeffs.size() * prec);
    for (const auto& c : coeffs) {
        if (c.prec() != prec) throw std::invalid_argument("coefficients have different precisions");
        data.insert(data.end(), c.coeffs().begin(), c.coeffs().end());
    }
    return SeriesPoly(prec, std::move(data));
}

SeriesPoly SeriesPoly::constant(const TruncSeries& c) {
    return SeriesPoly(c.prec(), std::vector<Fp>(c.coeffs().begin(), c.coeffs().end()));
}

SeriesPoly SeriesPoly::monomial(std::size_t j, std::size_t prec, Fp c) {
    std::vector<Fp> data((j + 1) * prec);
    data[j * prec] = c;
    return SeriesPoly(prec, std::move(data));
}

SeriesPoly SeriesPoly::from_dense(const DensePoly& a, std::size_t prec) {
    const auto c = a.coeffs();
    std::vector<Fp> data(c.size() * prec);
    for (std::size_t j = 0; j < c.size(); ++j) data[j * prec] = c[j];
    return SeriesPoly(prec, std::move(data));
}

bool SeriesPoly::is_monic() const noexcept {
    if (is_zero()) return false;
    const auto top = coeff(rows() - 1);
    if (top[0].v != 1) return false;
    return std::all_of(top.begin() + 1, top.end(), [](Fp v) { return v.v == 0; });
}

TruncSeries SeriesPoly::coeff_series(std::size_t j) const {
    if (j >= rows()) return TruncSeries(prec_);
    const auto c = coeff(j);
    return TruncSeries(std::vector<Fp>(c.begin(), c.end()));
}

SeriesPoly SeriesPoly::truncated(std::size_t k) const {
    if (k > prec_) throw std::invalid_argument("truncation cannot raise precision");
    if (k == prec_) return *this;
    std::vector<Fp> data(rows() * k);
    for (std::size_t j = 0; j < rows(); ++j) {
        const auto src = coeff(j);
        std::copy_n(src.begin(), k, data.begin() + static_cast<std::ptrdiff_t>(j * k));
    }
    return SeriesPoly(k, std::move(data));
}

SeriesPoly SeriesPoly::lifted(std::size_t k) const {
    if (k < prec_) throw std::invalid_argument("lift cannot lower precision");
    if (k == prec_) return *this;
    std::vector<Fp> data(rows() * k);
    for (std::size_t j = 0; j < rows(); ++j) {
        const auto src = coeff(j);
        std::copy(src.begin(), src.end(), data.begin() + static_cast<std::ptrdiff_t>(j * k));
    }
    return SeriesPoly(k, std::move(data));
}

SeriesPoly SeriesPoly::low_rows(std::size_t count) const {
    if (count >= rows()) return *this;
    return SeriesPoly(prec_, std::vector<Fp>(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * prec_)));
}

SeriesPoly SeriesPoly::row_slice(std::size_t from, std::size_t count) const {
    std::vector<Fp> data(count * prec_);
    for (std::size_t j = 0; j < count && from + j < rows(); ++j) {
        const auto src = coeff(from + j);
        std::copy(src.begin(), src.end(), data.begin() + static_cast<std::ptrdiff_t>(j * prec_));
    }
    return SeriesPoly(prec_, std::move(data));
}

void SeriesPoly::normalize() {
    while (!data_.empty()) {
        const auto top = coeff(rows() - 1);
        if (std::any_of(top.begin(), top.end(), [](Fp v) { return v.v != 0; })) break;
        data_.resize(data_.size() - prec_);
    }
}

SeriesPoly add(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    require_same_prec(a, b);
    const SeriesPoly& big = a.rows() >= b.rows() ? a : b;
    const SeriesPoly& small = a.rows() >= b.rows() ? b : a;
    std::vector<Fp> data(big.data().begin(), big.data().end());
    const auto s = small.data();
    for (std::size_t i = 0; i < s.size(); ++i) data[i] = F.add(data[i], s[i]);
    return SeriesPoly(a.prec(), std::move(data));
}

SeriesPoly sub(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    require_same_prec(a, b);
    std::vector<Fp> data(std::max(a.data().size(), b.data().size()));
    const auto ad = a.data();
    const auto bd = b.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Fp x = i < ad.size() ? ad[i] : Fp{};
        const Fp y = i < bd.size() ? bd[i] : Fp{};
        data[i] = F.sub(x, y);
    }
    return SeriesPoly(a.prec(), std::move(data));
}

SeriesPoly scale(const PrimeField& F, const SeriesPoly& a, Fp c) {
    std::vector<Fp> data(a.data().begin(), a.data().end());
    for (auto& v : data) v = F.mul(v, c);
    return SeriesPoly(a.prec(), std::move(data));
}

SeriesPoly scale_series(const PrimeField& F, const SeriesPoly& a, const TruncSeries& c) {
    if (c.prec() < a.prec()) throw std::invalid_argument("scaling series has lower precision");
    const std::size_t k = a.prec();
    std::vector<Fp> data(a.data().size());
    for (std::size_t j = 0; j < a.rows(); ++j) {
        const auto prod = series_product(F, a.coeff(j), c.coeffs(), k);
        std::copy(prod.begin(), prod.end(), data.begin() + static_cast<std::ptrdiff_t>(j * k));
    }
    return SeriesPoly(k, std::move(data));
}

SeriesPoly mul_schoolbook(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    require_same_prec(a, b);
    const std::size_t k = a.prec();
    if (a.is_zero() || b.is_zero()) return SeriesPoly(k);
    std::vector<Fp> data((a.rows() + b.rows() - 1) * k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            mul_acc(F, std::span<Fp>(data.data() + (i + j) * k, k), a.coeff(i), b.coeff(j));
        }
    }
    return SeriesPoly(k, std::move(data));
}

namespace {

// Kronecker substitution x^i y^j -> z^(j * stride + i); row products have
// x-degree at most 2k - 2, so a stride of 2k - 1 keeps rows apart.
std::vector<Fp> kronecker_pack(const SeriesPoly& s) {
    const std::size_t k = s.prec();
    const std::size_t stride = 2 * k - 1;
    std::vector<Fp> z((s.rows() - 1) * stride + k);
    for (std::size_t j = 0; j < s.rows(); ++j) {
        const auto src = s.coeff(j);
        std::copy(src.begin(), src.end(), z.begin() + static_cast<std::ptrdiff_t>(j * stride));
    }
    return z;
}

SeriesPoly kronecker_unpack(std::span<const Fp> zc, std::size_t k, std::size_t from, std::size_t count) {
    const std::size_t stride = 2 * k - 1;
    std::vector<Fp> data(count * k);
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t base = (from + j) * stride;
        for (std::size_t i = 0; i < k && base + i < zc.size(); ++i) data[j * k + i] = zc[base + i];
    }
    return SeriesPoly(k, std::move(data));
}

// Rows [from, from + count) of a * b; cyclic != 0 wraps the packed product
// modulo z^cyclic.
SeriesPoly kronecker_product_rows(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b, std::size_t from,
                                  std::size_t count, std::size_t cyclic) {
    const auto za = kronecker_pack(a);
    const auto zb = kronecker_pack(b);
    const auto zc = cyclic ? ntt::multiply_cyclic(F, za, zb, cyclic) : ntt::multiply(F, za, zb);
    return kronecker_unpack(zc, a.prec(), from, count);
}

}  // namespace

SeriesPoly mul(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    require_same_prec(a, b);
    const std::size_t k = a.prec();
    if (a.is_zero() || b.is_zero()) return SeriesPoly(k);
    if (a.rows() * b.rows() * k * k <= kBivariateNaiveCutoff) return mul_schoolbook(F, a, b);

    const std::size_t rows = a.rows() + b.rows() - 1;
    return kronecker_product_rows(F, a, b, 0, rows, 0);
}

SeriesPoly mul_rows(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b, std::size_t from,
                    std::size_t count) {
    require_same_prec(a, b);
    const std::size_t k = a.prec();
    if (a.is_zero() || b.is_zero() || count == 0) return SeriesPoly(k);
    const std::size_t rows = a.rows() + b.rows() - 1;
    if (a.rows() * b.rows() * k * k <= kBivariateNaiveCutoff || from == 0 || from + count > rows)
        return mul(F, a, b).row_slice(from, count);
    // A cyclic product only has to keep the wanted rows clear of the
    // wrapped-around low part.
    const std::size_t stride = 2 * k - 1;
    const std::size_t total = (rows - 1) * stride + 2 * k - 1;
    const std::size_t want_end = (from + count - 1) * stride + 2 * k - 1;
    std::size_t len = std::max({want_end, total - from * stride, (a.rows() - 1) * stride + k,
                                (b.rows() - 1) * stride + k});
    len = std::bit_ceil(len);
    if (len >= std::bit_ceil(total) || std::min(a.rows(), b.rows()) * k <= 48)
        return mul(F, a, b).row_slice(from, count);
    return kronecker_product_rows(F, a, b, from, count, len);
}

std::size_t kronecker_length(std::size_t k, std::size_t rows) {
    return std::bit_ceil((rows - 1) * (2 * k - 1) + 2 * k - 1);
}

ntt::Spectrum kronecker_spectrum(const PrimeField& F, const SeriesPoly& a, std::size_t len) {
    if (a.is_zero()) return ntt::spectrum(F, {}, len);
    return ntt::spectrum(F, kronecker_pack(a), len);
}

SeriesPoly kronecker_rows(const PrimeField& F, const ntt::Spectrum& a, const ntt::Spectrum& b, std::size_t k,
                          std::size_t from, std::size_t count) {
    return kronecker_unpack(ntt::multiply_spectra(F, a, b), k, from, count);
}

SeriesPoly reverse_rows(const SeriesPoly& a, std::size_t rows) {
    std::vector<Fp> data(rows * a.prec());
    for (std::size_t j = 0; j < rows && j < a.rows(); ++j) {
        const auto src = a.coeff(j);
        std::copy(src.begin(), src.end(), data.begin() + static_cast<std::ptrdiff_t>((rows - 1 - j) * a.prec()));
    }
    return SeriesPoly(a.prec(), std::move(data));
}

SeriesPoly inverse_mod_y_power(const PrimeField& F, const SeriesPoly& h, std::size_t rows) {
    const std::size_t k = h.prec();
    SeriesPoly g = SeriesPoly::monomial(0, k);
    std::size_t have = 1;
    while (have < rows) {
        const std::size_t want = std::min(2 * have, rows);
        // h g = 1 + y^have e with e known below y^(want - have)
        const SeriesPoly e = mul_rows(F, h.low_rows(want), g, have, want - have);
        const SeriesPoly corr = mul_low(F, g, e, want - have);
        std::vector<Fp> shifted(have * k);
        shifted.insert(shifted.end(), corr.data().begin(), corr.data().end());
        g = sub(F, g, SeriesPoly(k, std::move(shifted)));
        have = want;
    }
    return g;
}

SeriesPoly mul_low(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b, std::size_t rows) {
    return mul(F, a.low_rows(rows), b.low_rows(rows)).low_rows(rows);
}

SeriesDivRem divrem_monic(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    require_same_prec(a, b);
    if (!b.is_monic()) throw std::domain_error("non-monic divisor");
    const std::size_t k = a.prec();
    if (a.degree() < b.degree()) return {SeriesPoly(k), a};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (db == 0) return {a, SeriesPoly(k)};
    const std::size_t qlen = static_cast<std::size_t>(a.degree()) - db + 1;
    if (qlen * db <= kNewtonDivisionCutoff) return divrem_schoolbook(F, a, b);
    return divrem_newton(F, a, b);
}

SeriesPoly rem_monic(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b) {
    return divrem_monic(F, a, b).remainder;
}

SeriesPoly invert_mod(const PrimeField& F, const SeriesPoly& u, const SeriesPoly& A, std::size_t k) {
    if (!A.is_monic()) throw std::domain_error("non-monic divisor");
    if (u.prec() < k || A.prec() < k) throw std::invalid_argument("inputs known below the requested precision");
    if (A.degree() == 0) return SeriesPoly(k);
    const SeriesPoly Ak = A.truncated(k);
    const SeriesPoly w = rem_monic(F, u.truncated(k), Ak);
    const DensePoly w0 = eval_x0(w);
    if (w0.degree() != 0) throw std::domain_error("non-unit");

    SeriesPoly v = SeriesPoly::monomial(0, 1, F.inv(w0.coeff(0)));
    std::size_t have = 1;
    while (have < k) {
        const std::size_t want = std::min(2 * have, k);
        const SeriesPoly v_up = v.lifted(want);
        const SeriesPoly A_w = Ak.truncated(want);
        SeriesPoly e = rem_monic(F, mul(F, w.truncated(want), v_up), A_w);
        e = sub(F, SeriesPoly::monomial(0, want), e);
        v = rem_monic(F, add(F, v_up, mul(F, v_up, e)), A_w);
        have = want;
    }
    return v;
}

SeriesPoly derivative_y(const PrimeField& F, const SeriesPoly& Q) {
    const std::size_t k = Q.prec();
    if (Q.rows() <= 1) return SeriesPoly(k);
    std::vector<Fp> data((Q.rows() - 1) * k);
    for (std::size_t j = 1; j < Q.rows(); ++j) {
        const Fp factor = F.from_uint(j);
        const auto src = Q.coeff(j);
        for (std::size_t i = 0; i < k; ++i) data[(j - 1) * k + i] = F.mul(src[i], factor);
    }
    return SeriesPoly(k, std::move(data));
}

std::size_t x_valuation(const SeriesPoly& Q) {
    std::size_t best = Q.prec();
    for (std::size_t j = 0; j < Q.rows(); ++j) {
        const auto c = Q.coeff(j);
        for (std::size_t i = 0; i < best; ++i) {
            if (c[i].v != 0) {
                best = i;
                break;
            }
        }
    }
    return best;
}

DensePoly eval_x0(const SeriesPoly& Q) {
    std::vector<Fp> c(Q.rows());
    for (std::size_t j = 0; j < Q.rows(); ++j) c[j] = Q.coeff(j)[0];
    return DensePoly(std::move(c));
}

SeriesPoly divide_by_x_power(const SeriesPoly& Q, std::size_t s) {
    if (s >= Q.prec()) throw std::invalid_argument("division by x^s would exhaust the precision");
    const std::size_t k = Q.prec() - s;
    std::vector<Fp> data(Q.rows() * k);
    for (std::size_t j = 0; j < Q.rows(); ++j) {
        const auto src = Q.coeff(j);
        std::copy(src.begin() + static_cast<std::ptrdiff_t>(s), src.end(),
                  data.begin() + static_cast<std::ptrdiff_t>(j * k));
    }
    return SeriesPoly(k, std::move(data));
}

SeriesPoly multiply_by_x_power(const SeriesPoly& Q, std::size_t s) {
    const std::size_t k = Q.prec();
    std::vector<Fp> data(Q.rows() * k);
    if (s < k) {
        for (std::size_t j = 0; j < Q.rows(); ++j) {
            const auto src = Q.coeff(j);
            std::copy_n(src.begin(), k - s, data.begin() + static_cast<std::ptrdiff_t>(j * k + s));
        }
    }
    return SeriesPoly(k, std::move(data));
}

SeriesPoly scale_y_by_x_power(const SeriesPoly& Q, std::size_t t) {
    const std::size_t k = Q.prec();
    std::vector<Fp> data(Q.rows() * k);
    for (std::size_t j = 0; j < Q.rows(); ++j) {
        const std::size_t shift = j * t;
        if (shift >= k) break;
        const auto src = Q.coeff(j);
        std::copy_n(src.begin(), k - shift, data.begin() + static_cast<std::ptrdiff_t>(j * k + shift));
    }
    return SeriesPoly(k, std::move(data));
}

StrippedPoly strip_valuation(const SeriesPoly& Q, std::size_t d) {
    if (Q.prec() < d) throw std::invalid_argument("polynomial known below the requested precision");
    const SeriesPoly Qd = Q.truncated(d);
    const std::size_t s = x_valuation(Qd);
    if (s >= d) throw std::domain_error("full root space");
    return {divide_by_x_power(Qd, s), s};
}

SeriesPoly shift_y(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f, std::size_t t, std::size_t k) {
    if (k > Q.prec()) throw std::invalid_argument("shift target precision exceeds input precision");
    const SeriesPoly Qk = Q.truncated(k);
    const SeriesPoly centered = taylor_shift(F, Qk, TruncSeries::from_poly(f, k));
    return scale_y_by_x_power(centered, t);
}

TruncSeries evaluate(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f, std::size_t k) {
    if (k > Q.prec()) throw std::invalid_argument("evaluation precision exceeds input precision");
    const TruncSeries fk = TruncSeries::from_poly(f, k);
    TruncSeries acc(k);
    for (std::size_t j = Q.rows(); j-- > 0;) {
        acc = series_mul(F, acc, fk);
        const auto row = Q.coeff(j);
        for (std::size_t i = 0; i < k; ++i) acc[i] = F.add(acc[i], row[i]);
    }
    return acc;
}

}  // namespace sroots
