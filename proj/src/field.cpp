#include "sroots/field.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sroots {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Remainder of a by monic b, in place on a coefficient vector.
void rem_in_place(const PrimeField& F, std::vector<Fp>& a, std::span<const Fp> b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Fp lead = a.back();
        if (lead.v != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(lead, b[i]));
        }
        a.pop_back();
    }
    while (!a.empty() && a.back().v == 0) a.pop_back();
}

// Divides f by (y - r) once; returns false if the remainder is nonzero.
bool divide_linear(const PrimeField& F, std::vector<Fp>& f, Fp r) {
    if (f.empty()) return false;
    std::vector<Fp> q(f.size() - 1);
    Fp carry{};
    for (std::size_t i = f.size(); i-- > 0;) {
        const Fp cur = F.add(f[i], F.mul(carry, r));
        if (i == 0) {
            if (cur.v != 0) return false;
        } else {
            q[i - 1] = cur;
        }
        carry = cur;
    }
    f = std::move(q);
    return true;
}

void equal_degree_split(const PrimeField& F, const DensePoly& g, std::mt19937_64& rng, std::vector<Fp>& roots) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        roots.push_back(F.neg(g.coeff(0)));
        return;
    }
    const u64 half = (F.modulus() - 1) / 2;
    std::uniform_int_distribution<std::uint32_t> dist(0, F.modulus() - 1);
    for (;;) {
        const DensePoly shifted(std::vector<Fp>{Fp{dist(rng)}, F.one()});
        DensePoly w = poly_powmod(F, shifted, half, g);
        w = poly_sub(F, w, DensePoly(std::vector<Fp>{F.one()}));
        DensePoly d = poly_gcd(F, w, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            equal_degree_split(F, d, rng, roots);
            equal_degree_split(F, poly_divrem(F, g, d).quotient, rng, roots);
            return;
        }
    }
}

}  // namespace

std::size_t multiplicity_at(const PrimeField& F, const DensePoly& f, Fp r) {
    std::vector<Fp> work(f.coeffs().begin(), f.coeffs().end());
    std::size_t m = 0;
    while (work.size() > 1 && divide_linear(F, work, r)) ++m;
    return m;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("modulus must satisfy 2 <= p < 2^31");
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
    u64 q = p - 1;
    while (q != 0 && (q & 1) == 0) {
        q >>= 1;
        ++two_adicity_;
    }
    if (p == 2) {
        generator_ = Fp{1};
        return;
    }
    const auto factors = prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 f : factors) {
            if (powmod64(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = Fp{g};
            break;
        }
    }
}

Fp PrimeField::from_int(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp{static_cast<std::uint32_t>(r)};
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const noexcept { return Fp{static_cast<std::uint32_t>(powmod64(a.v, e, p_))}; }

Fp PrimeField::inv(Fp a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

DensePoly DensePoly::from_ints(const PrimeField& F, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Fp> c;
    c.reserve(coeffs.size());
    for (auto x : coeffs) c.push_back(F.from_int(x));
    return DensePoly(std::move(c));
}

DensePoly DensePoly::monomial(std::size_t degree, Fp c) {
    std::vector<Fp> v(degree + 1);
    v[degree] = c;
    return DensePoly(std::move(v));
}

DensePoly poly_add(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
    std::vector<Fp> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return DensePoly(std::move(c));
}

DensePoly poly_sub(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
    std::vector<Fp> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return DensePoly(std::move(c));
}

DensePoly poly_scale(const PrimeField& F, const DensePoly& a, Fp c) {
    std::vector<Fp> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : out) x = F.mul(x, c);
    return DensePoly(std::move(out));
}

DensePoly poly_mul(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Fp> c(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].v == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(ac[i], bc[j]));
    }
    return DensePoly(std::move(c));
}

Fp poly_eval(const PrimeField& F, const DensePoly& a, Fp y) {
    Fp acc{};
    const auto c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, y), c[i]);
    return acc;
}

DensePoly poly_derivative(const PrimeField& F, const DensePoly& a) {
    const auto c = a.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Fp> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = F.mul(c[i], F.from_uint(i));
    return DensePoly(std::move(d));
}

DensePoly poly_make_monic(const PrimeField& F, const DensePoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

PolyDivRem poly_divrem(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
    if (!b.is_monic()) throw std::domain_error("non-monic divisor");
    if (a.degree() < b.degree()) return {DensePoly{}, a};
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Fp> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Fp> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Fp lead = r[k + db];
        q[k] = lead;
        if (lead.v != 0) {
            for (std::size_t i = 0; i < db; ++i) r[k + i] = F.sub(r[k + i], F.mul(lead, bc[i]));
        }
        r[k + db] = Fp{};
    }
    r.resize(db);
    return {DensePoly(std::move(q)), DensePoly(std::move(r))};
}

DensePoly poly_rem(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
    if (!b.is_monic()) throw std::domain_error("non-monic divisor");
    std::vector<Fp> r(a.coeffs().begin(), a.coeffs().end());
    rem_in_place(F, r, b.coeffs());
    return DensePoly(std::move(r));
}

DensePoly poly_gcd(const PrimeField& F, DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
        b = poly_make_monic(F, b);
        DensePoly r = poly_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(F, a);
}

DensePoly poly_powmod(const PrimeField& F, const DensePoly& base, std::uint64_t e, const DensePoly& modulus) {
    if (modulus.degree() < 1 || !modulus.is_monic())
        throw std::domain_error("powmod needs a monic modulus of degree >= 1");
    DensePoly result(std::vector<Fp>{F.one()});
    result = poly_rem(F, result, modulus);
    DensePoly b = poly_rem(F, base, modulus);
    while (e) {
        if (e & 1) result = poly_rem(F, poly_mul(F, result, b), modulus);
        e >>= 1;
        if (e) b = poly_rem(F, poly_mul(F, b, b), modulus);
    }
    return result;
}

DensePoly poly_modexp_frobenius(const PrimeField& F, const DensePoly& f) {
    if (f.degree() < 1) throw std::domain_error("frobenius modulus must have degree >= 1");
    return poly_powmod(F, DensePoly::monomial(1), F.modulus(), poly_make_monic(F, f));
}

std::vector<RootWithMultiplicity> find_roots_with_multiplicity(const PrimeField& F, const DensePoly& f,
                                                               std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("zero polynomial has no root set");
    std::vector<RootWithMultiplicity> out;
    if (f.degree() == 0) return out;

    std::vector<Fp> roots;
    if (F.modulus() <= (1u << 16)) {
        for (std::uint32_t a = 0; a < F.modulus(); ++a) {
            if (poly_eval(F, f, Fp{a}).v == 0) roots.push_back(Fp{a});
        }
    } else {
        const DensePoly g = poly_make_monic(F, f);
        const DensePoly frob = poly_modexp_frobenius(F, g);
        const DensePoly split = poly_gcd(F, poly_sub(F, frob, DensePoly::monomial(1)), g);
        std::mt19937_64 rng(seed);
        equal_degree_split(F, split, rng, roots);
        std::sort(roots.begin(), roots.end());
    }
    out.reserve(roots.size());
    for (Fp r : roots) out.push_back({r, multiplicity_at(F, f, r)});
    return out;
}

}  // namespace sroots
