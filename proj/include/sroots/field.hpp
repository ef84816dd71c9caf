#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace sroots {

/// Residue modulo the field characteristic, always kept in [0, p).
struct Fp {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(Fp, Fp) = default;
};

/// The prime field F_p with 2 <= p < 2^31.
///
/// Construction verifies primality (deterministic Miller-Rabin) and caches
/// the data the transform-based multiplication needs: the 2-adic valuation
/// of p - 1 and a generator of the multiplicative group.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Fp zero() const noexcept { return Fp{0}; }
    Fp one() const noexcept { return Fp{1}; }
    Fp from_int(std::int64_t x) const noexcept;
    Fp from_uint(std::uint64_t x) const noexcept { return Fp{static_cast<std::uint32_t>(x % p_)}; }

    Fp add(Fp a, Fp b) const noexcept {
        std::uint32_t s = a.v + b.v;
        return Fp{s >= p_ ? s - p_ : s};
    }
    Fp sub(Fp a, Fp b) const noexcept { return Fp{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)}; }
    Fp neg(Fp a) const noexcept { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
    Fp mul(Fp a, Fp b) const noexcept {
        return Fp{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
    }
    Fp pow(Fp a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error on zero.
    Fp inv(Fp a) const;

    /// Largest k with 2^k | p - 1 (0 for p = 2).
    unsigned two_adicity() const noexcept { return two_adicity_; }
    /// A generator of F_p^*.
    Fp primitive_root() const noexcept { return generator_; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
    unsigned two_adicity_ = 0;
    Fp generator_{};
};

bool is_prime(std::uint64_t n);

/// Dense univariate polynomial over F_p, normalized (no leading zeros; the
/// zero polynomial has no coefficients).
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Fp> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static DensePoly from_ints(const PrimeField& F, std::initializer_list<std::int64_t> coeffs);
    static DensePoly monomial(std::size_t degree, Fp c = Fp{1});

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().v == 1; }
    Fp lead() const noexcept { return c_.empty() ? Fp{} : c_.back(); }
    Fp coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Fp{}; }
    std::span<const Fp> coeffs() const noexcept { return c_; }

    void normalize() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    std::vector<Fp> c_;
};

struct PolyDivRem {
    DensePoly quotient;
    DensePoly remainder;
};

struct RootWithMultiplicity {
    Fp root;
    std::size_t multiplicity;

    friend bool operator==(const RootWithMultiplicity&, const RootWithMultiplicity&) = default;
};

DensePoly poly_add(const PrimeField& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_sub(const PrimeField& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_scale(const PrimeField& F, const DensePoly& a, Fp c);
DensePoly poly_mul(const PrimeField& F, const DensePoly& a, const DensePoly& b);
Fp poly_eval(const PrimeField& F, const DensePoly& a, Fp y);
DensePoly poly_derivative(const PrimeField& F, const DensePoly& a);
DensePoly poly_make_monic(const PrimeField& F, const DensePoly& a);

/// Division by a monic divisor; throws std::domain_error("non-monic divisor")
/// when b is zero or not monic.
PolyDivRem poly_divrem(const PrimeField& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_rem(const PrimeField& F, const DensePoly& a, const DensePoly& b);

/// Monic gcd (zero if both inputs are zero).
DensePoly poly_gcd(const PrimeField& F, DensePoly a, DensePoly b);

/// base^e rem modulus for a monic modulus of degree >= 1.
DensePoly poly_powmod(const PrimeField& F, const DensePoly& base, std::uint64_t e, const DensePoly& modulus);

/// Number of times (y - r) divides f (0 if f(r) != 0 or f = 0).
std::size_t multiplicity_at(const PrimeField& F, const DensePoly& f, Fp r);

/// y^p rem f, for f monic of degree >= 1.
DensePoly poly_modexp_frobenius(const PrimeField& F, const DensePoly& f);

/// All roots of f in F_p with multiplicities, ascending by root value.
///
/// Small fields (p <= 2^16) are scanned exhaustively. Larger fields isolate
/// the split part gcd(y^p - y, f) and factor it by equal-degree splitting
/// driven by `seed`; the result does not depend on the seed.
std::vector<RootWithMultiplicity> find_roots_with_multiplicity(const PrimeField& F, const DensePoly& f,
                                                               std::uint64_t seed = 0);

}  // namespace sroots
