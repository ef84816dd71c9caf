#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sroots/series.hpp"
#include "support.hpp"

using namespace sroots;
using sroots::testing::Rng;

namespace {

// rows[j][i] = coefficient of x^i y^j
SeriesPoly P(const PrimeField& F, std::size_t prec, std::vector<std::vector<std::int64_t>> rows) {
    return SeriesPoly::from_rows(F, prec, rows);
}

}  // namespace

TEST_CASE("truncated series basics") {
    const PrimeField F(5);
    CHECK_THROWS(TruncSeries(0));
    const TruncSeries a(std::vector<Fp>{Fp{0}, Fp{0}, Fp{3}});
    CHECK(a.valuation() == 2);
    CHECK(TruncSeries(4).valuation() == 4);
    const TruncSeries one_plus_x(std::vector<Fp>{Fp{1}, Fp{1}, Fp{0}});
    const TruncSeries inv = series_inv(F, one_plus_x);
    CHECK(series_mul(F, inv, one_plus_x) == TruncSeries::constant(F.one(), 3));
    CHECK_THROWS(series_inv(F, a));
}

TEST_CASE("x_valuation and eval_x0") {
    const PrimeField F(7);
    CHECK(x_valuation(P(F, 4, {{0, 0, 0, 1}, {0, 0, 1, 0}})) == 2);
    CHECK(x_valuation(P(F, 3, {{0}, {1}, {1}})) == 0);
    CHECK(x_valuation(SeriesPoly(5)) == 5);

    CHECK(eval_x0(P(F, 3, {{0, 0, 1}, {0, 1}, {1}})) == DensePoly::from_ints(F, {0, 0, 1}));
    CHECK(eval_x0(P(F, 2, {{-1, -1}, {1, 1}})) == DensePoly::from_ints(F, {-1, 1}));
    CHECK(eval_x0(P(F, 2, {{0}, {0, 1}})).is_zero());
}

TEST_CASE("normalization is eager") {
    const PrimeField F(3);
    const SeriesPoly a = P(F, 2, {{1}, {0, 1}, {0, 0}});
    CHECK(a.degree() == 1);
    CHECK(sub(F, a, a).is_zero());
    CHECK(P(F, 2, {{0, 0}}).degree() == -1);
}

TEST_CASE("strip_valuation") {
    const PrimeField F(2);
    auto st = strip_valuation(P(F, 2, {{0}, {0, 1}}), 2);
    CHECK(st.valuation == 1);
    CHECK(st.poly == P(F, 1, {{0}, {1}}));

    st = strip_valuation(P(F, 3, {{0}, {1}, {1}}), 3);
    CHECK(st.valuation == 0);
    CHECK(st.poly == P(F, 3, {{0}, {1}, {1}}));

    st = strip_valuation(P(F, 3, {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}), 3);
    CHECK(st.valuation == 2);
    CHECK(st.poly == P(F, 1, {{1}, {1}, {1}}));

    CHECK_THROWS_WITH_AS(strip_valuation(P(F, 3, {{0, 0, 0}, {0, 0, 0}}), 3), "full root space", std::domain_error);
    CHECK_THROWS_WITH_AS(strip_valuation(P(F, 3, {{0, 0, 1}}), 2), "full root space", std::domain_error);
}

TEST_CASE("shift_y examples") {
    const PrimeField F3(3), F2(2);
    const std::vector<Fp> x{Fp{0}, Fp{1}};
    CHECK(shift_y(F3, P(F3, 5, {{0}, {0}, {1}}), x, 2, 5) == P(F3, 5, {{0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 0, 1}}));

    Rng rng(1);
    const SeriesPoly Q = testing::random_poly(F3, rng, 4, 6);
    CHECK(shift_y(F3, Q, {}, 0, 4) == Q.truncated(4));

    const std::vector<Fp> one{Fp{1}};
    // (1 + xy)^2 + (1 + xy) = x^2 y^2 + xy, and x^2 dies at precision 2
    const SeriesPoly s = shift_y(F2, P(F2, 2, {{0}, {1}, {1}}), one, 1, 2);
    CHECK(s == P(F2, 2, {{0}, {0, 1}}));
    CHECK(s.degree() == 1);
}

TEST_CASE("shift_y matches Horner and composes") {
    Rng rng(2);
    for (std::uint32_t p : {2u, 3u, 5u, 101u, 998244353u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t k = 1 + rng() % 9;
            const SeriesPoly Q = testing::random_poly(F, rng, rng() % 12, k + 2);
            const std::size_t t = rng() % (k + 1), u = rng() % 4;
            const auto f = testing::random_digits(F, rng, t);
            const auto g = testing::random_digits(F, rng, u);
            const SeriesPoly once = shift_y(F, Q, f, t, k);
            CHECK(once == testing::naive_shift(F, Q, f, t, k));

            std::vector<Fp> fg(t + u);
            std::copy(f.begin(), f.end(), fg.begin());
            std::copy(g.begin(), g.end(), fg.begin() + t);
            CHECK(shift_y(F, once, g, u, k) == shift_y(F, Q, fg, t + u, k));
        }
    }
}

TEST_CASE("mul examples and schoolbook agreement") {
    const PrimeField F5(5);
    const SeriesPoly a = P(F5, 2, {{0, 1}, {0}, {1}});
    const SeriesPoly b = P(F5, 2, {{2}, {0, 1}});
    CHECK(mul(F5, a, b) == P(F5, 2, {{0, 2}, {0}, {2}, {0, 1}}));
    CHECK(mul(F5, a, SeriesPoly::monomial(0, 2)) == a);
    CHECK(mul(F5, a, SeriesPoly(2)).is_zero());

    Rng rng(3);
    for (std::uint32_t p : {2u, 7u, 65537u, 998244353u, 2147483647u}) {
        const PrimeField F(p);
        for (auto [da, db, k] : {std::tuple{3, 4, 5}, {40, 30, 20}, {1, 100, 64}, {70, 70, 3}, {0, 5, 130}}) {
            const SeriesPoly x = testing::random_poly(F, rng, da, k);
            const SeriesPoly y = testing::random_poly(F, rng, db, k);
            CHECK(mul(F, x, y) == mul_schoolbook(F, x, y));
        }
    }
}

TEST_CASE("mul_rows is a slice of the product") {
    Rng rng(4);
    for (std::uint32_t p : {2u, 998244353u, 2147483647u}) {
        const PrimeField F(p);
        for (auto [da, db, k] : {std::tuple{3, 4, 5}, {20, 40, 16}, {64, 127, 32}, {9, 200, 8}}) {
            const SeriesPoly x = testing::random_poly(F, rng, da, k);
            const SeriesPoly y = testing::random_poly(F, rng, db, k);
            const SeriesPoly full = mul(F, x, y);
            const std::size_t rows = static_cast<std::size_t>(da + db + 1);
            for (auto [from, count] : {std::pair<std::size_t, std::size_t>{0, 3}, {std::size_t(da), std::size_t(db)},
                                       {rows / 2, rows - rows / 2}, {rows - 1, 4}, {1, 1}}) {
                CHECK(mul_rows(F, x, y, from, count) == full.row_slice(from, count));
            }
        }
        // shapes where the wrapped product is shorter than the full one
        for (auto [ds, dc, k] : {std::tuple{64, 64, 16}, {40, 90, 8}, {100, 30, 4}}) {
            const SeriesPoly x = testing::random_poly(F, rng, ds, k);
            const SeriesPoly y = testing::random_poly(F, rng, ds + dc - 1, k);
            CHECK(mul_rows(F, x, y, ds, dc) == mul(F, x, y).row_slice(ds, dc));
        }
    }
}

TEST_CASE("divrem_monic") {
    const PrimeField F5(5);
    auto qr = divrem_monic(F5, P(F5, 3, {{0}, {0}, {0, 0, 1}}), P(F5, 3, {{-1}, {1}}));
    CHECK(qr.quotient == P(F5, 3, {{0, 0, 1}, {0, 0, 1}}));
    CHECK(qr.remainder == P(F5, 3, {{0, 0, 1}}));

    const SeriesPoly b = P(F5, 3, {{1, 2}, {3}, {0, 4}, {1}});
    qr = divrem_monic(F5, P(F5, 3, {{1}, {1, 1}}), b);
    CHECK(qr.quotient.is_zero());
    CHECK(qr.remainder == P(F5, 3, {{1}, {1, 1}}));
    qr = divrem_monic(F5, b, b);
    CHECK(qr.quotient == SeriesPoly::monomial(0, 3));
    CHECK(qr.remainder.is_zero());
    CHECK_THROWS(divrem_monic(F5, b, P(F5, 3, {{1}, {2}})));
    CHECK_THROWS(divrem_monic(F5, b, P(F5, 3, {{1}, {1, 1}})));

    Rng rng(4);
    for (std::uint32_t p : {2u, 3u, 998244353u, 1000003u}) {
        const PrimeField F(p);
        for (auto [da, db, k] : {std::tuple{5, 2, 4}, {9, 9, 3}, {80, 30, 12}, {200, 3, 6}, {60, 59, 40}}) {
            const SeriesPoly a = testing::random_poly(F, rng, da, k);
            const SeriesPoly m = testing::random_monic(F, rng, db, k);
            const auto r = divrem_monic(F, a, m);
            CHECK(r.remainder.degree() < m.degree());
            CHECK(add(F, mul(F, r.quotient, m), r.remainder) == a);
            CHECK(rem_monic(F, a, m) == r.remainder);
        }
    }
}

TEST_CASE("invert_mod") {
    const PrimeField F5(5);
    CHECK(invert_mod(F5, P(F5, 1, {{2}}), SeriesPoly::monomial(2, 1), 1) == P(F5, 1, {{3}}));
    CHECK(invert_mod(F5, P(F5, 2, {{1}, {0, 1}}), SeriesPoly::monomial(2, 2), 2) == P(F5, 2, {{1}, {0, 4}}));
    CHECK_THROWS_WITH(invert_mod(F5, P(F5, 2, {{0, 1}}), SeriesPoly::monomial(2, 2), 2), "non-unit");

    Rng rng(5);
    for (std::uint32_t p : {2u, 3u, 7u, 998244353u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t k = 1 + rng() % 20, n = 1 + rng() % 6;
            // u = c + (multiple of A) + x * junk: (u rem A) is c at x = 0
            const Fp a0 = testing::random_fp(F, rng);
            SeriesPoly A = SeriesPoly::monomial(0, k);
            for (std::size_t e = 0; e < n; ++e) A = mul(F, A, P(F, k, {{-static_cast<std::int64_t>(a0.v)}, {1}}));
            A = add(F, A, multiply_by_x_power(testing::random_poly(F, rng, n - 1, k), 1));
            const Fp c{static_cast<std::uint32_t>(1 + rng() % (p - 1))};
            SeriesPoly u = add(F, SeriesPoly::monomial(0, k, c), mul(F, A, testing::random_poly(F, rng, n, k)));
            u = add(F, u, multiply_by_x_power(testing::random_poly(F, rng, 2 * n, k), 1));
            const SeriesPoly v = invert_mod(F, u, A, k);
            CHECK(v.degree() < A.degree());
            CHECK(rem_monic(F, mul(F, u, v), A) == SeriesPoly::monomial(0, k));
        }
    }
}

TEST_CASE("derivative_y") {
    const PrimeField F7(7), F5(5);
    CHECK(derivative_y(F7, P(F7, 2, {{0}, {0, 1}, {1}})) == P(F7, 2, {{0, 1}, {2}}));
    CHECK(derivative_y(F7, P(F7, 2, {{3, 4}})).is_zero());
    CHECK(derivative_y(F5, SeriesPoly::monomial(5, 3)).is_zero());
}

TEST_CASE("evaluate") {
    const PrimeField F3(3);
    const SeriesPoly Q = P(F3, 3, {{0, 0, 1}, {0, -2}, {1}});  // (y - x)^2
    CHECK(evaluate(F3, Q, std::vector<Fp>{Fp{0}, Fp{1}, Fp{1}}, 3).is_zero());
    CHECK(evaluate(F3, Q, std::vector<Fp>{}, 3) == TruncSeries(std::vector<Fp>{Fp{0}, Fp{0}, Fp{1}}));
}
