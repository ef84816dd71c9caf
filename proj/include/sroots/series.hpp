#pragma once

#include "sroots/field.hpp"
#include "sroots/ntt.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sroots {

/// Power series in x known modulo x^prec; always stores exactly prec
/// coefficients (ascending in x).
class TruncSeries {
public:
    /// Zero series at precision `prec` (>= 1).
    explicit TruncSeries(std::size_t prec);
    /// Takes ownership of `coeffs`; the precision is coeffs.size() (>= 1).
    explicit TruncSeries(std::vector<Fp> coeffs);
    /// The polynomial `coeffs` (any length) reduced or zero-padded to `prec`.
    static TruncSeries from_poly(std::span<const Fp> coeffs, std::size_t prec);
    static TruncSeries constant(Fp c, std::size_t prec);

    std::size_t prec() const noexcept { return c_.size(); }
    std::span<const Fp> coeffs() const noexcept { return c_; }
    std::span<Fp> coeffs_mut() noexcept { return c_; }
    Fp operator[](std::size_t i) const noexcept { return c_[i]; }
    Fp& operator[](std::size_t i) noexcept { return c_[i]; }

    /// Index of the first nonzero coefficient, or prec() if zero.
    std::size_t valuation() const noexcept;
    bool is_zero() const noexcept { return valuation() == prec(); }
    TruncSeries truncated(std::size_t k) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<Fp> c_;
};

/// Polynomial in y whose coefficients are truncated series sharing one
/// precision. Stored flat: row j (length prec) is the coefficient of y^j.
/// Always normalized in y: the top row is a nonzero series unless the
/// polynomial is zero.
class SeriesPoly {
public:
    /// Zero polynomial at precision `prec` (>= 1).
    explicit SeriesPoly(std::size_t prec);
    /// `data` holds (deg + 1) * prec values, row-major in y.
    SeriesPoly(std::size_t prec, std::vector<Fp> data);

    static SeriesPoly from_rows(const PrimeField& F, std::size_t prec,
                                const std::vector<std::vector<std::int64_t>>& rows);
    static SeriesPoly from_series(std::span<const TruncSeries> coeffs);
    static SeriesPoly constant(const TruncSeries& c);
    /// c * y^j.
    static SeriesPoly monomial(std::size_t j, std::size_t prec, Fp c = Fp{1});
    /// The constant-in-x lift of a univariate polynomial in y.
    static SeriesPoly from_dense(const DensePoly& a, std::size_t prec);

    std::size_t prec() const noexcept { return prec_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(data_.size() / prec_) - 1; }
    std::size_t rows() const noexcept { return data_.size() / prec_; }
    bool is_zero() const noexcept { return data_.empty(); }
    /// Leading y-coefficient is the constant series 1.
    bool is_monic() const noexcept;

    std::span<const Fp> coeff(std::size_t j) const noexcept { return {data_.data() + j * prec_, prec_}; }
    std::span<Fp> coeff_mut(std::size_t j) noexcept { return {data_.data() + j * prec_, prec_}; }
    TruncSeries coeff_series(std::size_t j) const;
    Fp at(std::size_t j, std::size_t i) const noexcept {
        return j < rows() && i < prec_ ? data_[j * prec_ + i] : Fp{};
    }
    std::span<const Fp> data() const noexcept { return data_; }

    /// Reduction modulo x^k, k <= prec().
    SeriesPoly truncated(std::size_t k) const;
    /// Explicit zero-padding to a larger precision k >= prec().
    SeriesPoly lifted(std::size_t k) const;
    /// Coefficients of y^0 .. y^(count-1) (remainder modulo y^count).
    SeriesPoly low_rows(std::size_t count) const;
    /// Rows [from, from + count), zero-padded.
    SeriesPoly row_slice(std::size_t from, std::size_t count) const;

    void normalize();

    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

private:
    std::size_t prec_;
    std::vector<Fp> data_;
};

struct SeriesDivRem {
    SeriesPoly quotient;
    SeriesPoly remainder;
};

struct StrippedPoly {
    SeriesPoly poly;
    std::size_t valuation;
};

// ---- truncated series arithmetic -------------------------------------------

TruncSeries series_add(const PrimeField& F, const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const PrimeField& F, const TruncSeries& a, const TruncSeries& b);
TruncSeries series_neg(const PrimeField& F, const TruncSeries& a);
/// Product at min(prec a, prec b).
TruncSeries series_mul(const PrimeField& F, const TruncSeries& a, const TruncSeries& b);
/// Inverse of a series with nonzero constant term (Newton iteration).
TruncSeries series_inv(const PrimeField& F, const TruncSeries& a);

// ---- polynomials over truncated series -------------------------------------

SeriesPoly add(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly sub(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly scale(const PrimeField& F, const SeriesPoly& a, Fp c);
SeriesPoly scale_series(const PrimeField& F, const SeriesPoly& a, const TruncSeries& c);
/// Product at the common precision (inputs must agree on precision).
SeriesPoly mul(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b);
/// Quadratic reference product, used to cross-check the fast kernel.
SeriesPoly mul_schoolbook(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b);
/// a * b reduced modulo y^rows.
SeriesPoly mul_low(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b, std::size_t rows);
/// Rows [from, from + count) of a * b, skipping work on the rows below.
SeriesPoly mul_rows(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b, std::size_t from,
                    std::size_t count);
/// Reusable transforms behind mul: rows are packed at stride 2k - 1, and
/// kronecker_length(k, r) is the transform length for a product of r rows.
/// A shorter length wraps the product; rows clear of the wrap stay exact.
std::size_t kronecker_length(std::size_t k, std::size_t rows);
ntt::Spectrum kronecker_spectrum(const PrimeField& F, const SeriesPoly& a, std::size_t len);
/// Rows [from, from + count) of the product of two spectra of precision-k
/// operands.
SeriesPoly kronecker_rows(const PrimeField& F, const ntt::Spectrum& a, const ntt::Spectrum& b, std::size_t k,
                          std::size_t from, std::size_t count);
/// y^(rows-1) a(1/y); a must have at most `rows` rows.
SeriesPoly reverse_rows(const SeriesPoly& a, std::size_t rows);
/// Inverse of h modulo y^rows; the y^0 row of h must be the series 1.
SeriesPoly inverse_mod_y_power(const PrimeField& F, const SeriesPoly& h, std::size_t rows);

/// Division by a monic divisor at the common precision. Throws
/// std::domain_error if b is not monic.
SeriesDivRem divrem_monic(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly rem_monic(const PrimeField& F, const SeriesPoly& a, const SeriesPoly& b);

/// v with u * v = 1 modulo (A, x^k), deg_y v < deg_y A. Requires the
/// x-constant part of (u rem A) to be a nonzero field constant; throws
/// std::domain_error("non-unit") otherwise.
SeriesPoly invert_mod(const PrimeField& F, const SeriesPoly& u, const SeriesPoly& A, std::size_t k);

SeriesPoly derivative_y(const PrimeField& F, const SeriesPoly& Q);

/// min(val_x(Q), prec).
std::size_t x_valuation(const SeriesPoly& Q);
/// Q with x replaced by 0.
DensePoly eval_x0(const SeriesPoly& Q);
/// x^-s Q at precision prec - s, for s <= val_x(Q) and s < prec.
SeriesPoly divide_by_x_power(const SeriesPoly& Q, std::size_t s);
/// x^s Q at the same precision.
SeriesPoly multiply_by_x_power(const SeriesPoly& Q, std::size_t s);
/// Substitution y -> x^t y at the same precision.
SeriesPoly scale_y_by_x_power(const SeriesPoly& Q, std::size_t t);

/// Returns (x^-s Q mod x^(d-s), s) with s = val_x(Q). Throws
/// std::domain_error("full root space") if Q = 0 mod x^d.
StrippedPoly strip_valuation(const SeriesPoly& Q, std::size_t d);

/// Q(f + x^t y) mod x^k, k <= prec(Q). `f` holds the coefficients of a
/// polynomial in x (any length; only the first k matter).
SeriesPoly shift_y(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f, std::size_t t, std::size_t k);

/// Q(f) mod x^k.
TruncSeries evaluate(const PrimeField& F, const SeriesPoly& Q, std::span<const Fp> f, std::size_t k);

}  // namespace sroots
