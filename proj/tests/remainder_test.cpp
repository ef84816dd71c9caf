#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sroots/remainder.hpp"
#include "support.hpp"

using namespace sroots;
using sroots::testing::Rng;

namespace {

SeriesPoly P(const PrimeField& F, std::size_t prec, std::vector<std::vector<std::int64_t>> rows) {
    return SeriesPoly::from_rows(F, prec, rows);
}

TruncSeries S(const PrimeField& F, std::vector<std::int64_t> c) {
    std::vector<Fp> v;
    for (auto x : c) v.push_back(F.from_int(x));
    return TruncSeries(std::move(v));
}

}  // namespace

TEST_CASE("taylor_shift examples") {
    const PrimeField F5(5), F3(3);
    CHECK(taylor_shift(F5, P(F5, 1, {{0}, {0}, {1}}), S(F5, {1})) == P(F5, 1, {{1}, {2}, {1}}));
    CHECK(taylor_shift(F3, P(F3, 2, {{0}, {0}, {1}}), S(F3, {0, 1})) == P(F3, 2, {{0, 0}, {0, 2}, {1}}));
    const SeriesPoly R = P(F5, 3, {{1, 2, 3}, {4}, {0, 1}});
    CHECK(taylor_shift(F5, R, TruncSeries(3)) == R);
}

TEST_CASE("taylor_shift fast path matches Horner") {
    Rng rng(8);
    // p below, near, and far above the degree
    for (std::uint32_t p : {2u, 3u, 11u, 13u, 101u, 998244353u, 1000003u}) {
        const PrimeField F(p);
        for (std::size_t deg : {0u, 5u, 12u, 40u, 150u}) {
            const std::size_t k = 1 + rng() % 12;
            const SeriesPoly R = testing::random_poly(F, rng, deg, k);
            const TruncSeries y0(testing::random_digits(F, rng, k));
            CHECK(taylor_shift(F, R, y0) == taylor_shift_horner(F, R, y0));
        }
    }
}

TEST_CASE("multi_rem examples") {
    const PrimeField F2(2), F5(5);
    auto r = multi_rem(F2, P(F2, 1, {{0}, {1}, {1}}), {P(F2, 1, {{0}, {1}}), P(F2, 1, {{1}, {1}})});
    CHECK(r[0].is_zero());
    CHECK(r[1].is_zero());

    r = multi_rem(F5, SeriesPoly::monomial(2, 1), {P(F5, 1, {{-1}, {1}})});
    CHECK(r[0] == P(F5, 1, {{1}}));

    r = multi_rem(F5, SeriesPoly::monomial(3, 1), {P(F5, 1, {{1}, {0}, {1}}), P(F5, 1, {{-2}, {1}})});
    CHECK(r[0] == P(F5, 1, {{0}, {4}}));
    CHECK(r[1] == P(F5, 1, {{3}}));

    CHECK_THROWS(multi_rem(F5, SeriesPoly::monomial(3, 1), {P(F5, 1, {{1}, {2}})}));
}

TEST_CASE("subproduct tree and multi_rem against sequential division") {
    Rng rng(9);
    for (std::uint32_t p : {2u, 5u, 998244353u}) {
        const PrimeField F(p);
        for (std::size_t count : {1u, 2u, 3u, 7u, 16u, 33u}) {
            const std::size_t k = 1 + rng() % 8;
            std::vector<SeriesPoly> moduli;
            for (std::size_t i = 0; i < count; ++i) moduli.push_back(testing::random_monic(F, rng, rng() % 5, k));
            const SeriesPoly Pq = testing::random_poly(F, rng, rng() % 60, k);

            const SubproductTree tree(F, moduli);
            for (std::size_t lvl = 1; lvl < tree.levels().size(); ++lvl) {
                const auto& below = tree.levels()[lvl - 1];
                const auto& here = tree.levels()[lvl];
                for (std::size_t i = 0; i < here.size(); ++i) {
                    const SeriesPoly want =
                        2 * i + 1 < below.size() ? mul(F, below[2 * i], below[2 * i + 1]) : below[2 * i];
                    CHECK(here[i] == want);
                }
            }
            SeriesPoly prod = SeriesPoly::monomial(0, k);
            for (const auto& m : moduli) prod = mul(F, prod, m);
            CHECK(tree.root() == prod);

            const auto got = multi_rem(F, Pq, moduli);
            REQUIRE(got.size() == count);
            for (std::size_t i = 0; i < count; ++i) CHECK(got[i] == rem_monic(F, Pq, moduli[i]));
        }
    }
}

TEST_CASE("multi_rem on large trees") {
    // big enough products to take the z = 1/y descent; odd counts leave
    // unpaired nodes and degree 0 moduli give empty fractions
    Rng rng(21);
    for (std::uint32_t p : {2u, 7u, 998244353u}) {
        const PrimeField F(p);
        for (std::size_t count : {19u, 40u, 65u, 101u}) {
            const std::size_t k = 1 + rng() % 6;
            std::vector<SeriesPoly> moduli;
            for (std::size_t i = 0; i < count; ++i) moduli.push_back(testing::random_monic(F, rng, rng() % 7, k));
            moduli[rng() % count] = testing::random_monic(F, rng, 0, k);
            moduli[rng() % count] = testing::random_monic(F, rng, 40, k);
            for (std::size_t pd : {10u, 150u, 500u}) {
                const SeriesPoly Pq = testing::random_poly(F, rng, pd, k);
                const auto got = multi_rem(F, Pq, moduli);
                REQUIRE(got.size() == count);
                for (std::size_t i = 0; i < count; ++i) CHECK(got[i] == rem_monic(F, Pq, moduli[i]));
            }
        }
    }
}

TEST_CASE("shifted_rem examples") {
    const PrimeField F5(5);
    const SeriesPoly Q = P(F5, 3, {{1, 2}, {3}, {4, 0, 1}});
    auto r = shifted_rem(F5, Q, {{SeriesPoly::monomial(1, 3), TruncSeries(3), 0}});
    CHECK(r[0] == P(F5, 3, {{1, 2}}));

    r = shifted_rem(F5, SeriesPoly::monomial(2, 3), {{P(F5, 3, {{-1}, {1}}), TruncSeries(3), 1}});
    CHECK(r[0] == P(F5, 3, {{0, 0, 1}}));

    const TruncSeries f = S(F5, {2, 1, 0});
    r = shifted_rem(F5, Q, {{SeriesPoly::monomial(4, 3), f, 1}});
    CHECK(r[0] == shift_y(F5, Q, f.coeffs(), 1, 3));
}

TEST_CASE("shifted_rem equals remainder of the expanded shift") {
    Rng rng(10);
    for (std::uint32_t p : {2u, 3u, 5u, 101u, 998244353u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t k = 1 + rng() % 8;
            const SeriesPoly Q = testing::random_poly(F, rng, rng() % 7, k);
            std::vector<ShiftedModulus> req;
            const std::size_t count = 1 + rng() % 5;
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t t = rng() % (k + 1);
                req.push_back({testing::random_monic(F, rng, rng() % 5, k),
                               TruncSeries::from_poly(testing::random_digits(F, rng, t), k), t});
            }
            const auto got = shifted_rem(F, Q, req);
            for (std::size_t i = 0; i < count; ++i) {
                const SeriesPoly shift = testing::naive_shift(F, Q, req[i].center.coeffs(), req[i].x_power, k);
                CHECK(got[i] == rem_monic(F, shift, req[i].modulus));
            }
        }
    }
    // larger sizes take the transform paths
    const PrimeField F(998244353);
    const SeriesPoly Q = testing::random_poly(F, rng, 90, 40);
    std::vector<ShiftedModulus> req;
    for (int i = 0; i < 20; ++i)
        req.push_back({testing::random_monic(F, rng, 1 + rng() % 6, 40),
                       TruncSeries::from_poly(testing::random_digits(F, rng, 10), 40), 10});
    const auto got = shifted_rem(F, Q, req);
    for (std::size_t i = 0; i < req.size(); ++i)
        CHECK(got[i] == rem_monic(F, shift_y(F, Q, req[i].center.coeffs(), 10, 40), req[i].modulus));
}
