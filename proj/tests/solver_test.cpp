#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sroots/bench.hpp"
#include "sroots/oracle.hpp"
#include "sroots/solver.hpp"
#include "support.hpp"

using namespace sroots;
using sroots::testing::Rng;

namespace {

SeriesPoly P(const PrimeField& F, std::size_t prec, std::vector<std::vector<std::int64_t>> rows) {
    return SeriesPoly::from_rows(F, prec, rows);
}

Root R(std::vector<std::uint32_t> f, std::size_t m) {
    Root r{{}, m};
    for (auto c : f) r.f.push_back(Fp{c});
    return r;
}

const PrimeField F2(2), F3(3), F5(5);
const SeriesPoly y2_plus_y = P(F2, 1, {{0}, {1}, {1}});
const SeriesPoly y_minus_x_sq = P(F3, 3, {{0, 0, 1}, {0, 1}, {1}});
const SeriesPoly y2_plus_1 = P(F3, 4, {{1}, {0}, {1}});

}  // namespace

TEST_CASE("precision1_roots") {
    CHECK(precision1_roots(F2, y2_plus_y) == RootSet({R({0}, 1), R({1}, 1)}));
    CHECK(precision1_roots(F3, y2_plus_1).empty());
    CHECK(precision1_roots(F5, P(F5, 2, {{1, 1}, {-2}, {1}})) == RootSet({R({1}, 2)}));
    CHECK_THROWS(precision1_roots(F5, P(F5, 2, {{0, 1}})));
}

TEST_CASE("reference solvers on the worked examples") {
    for (auto solve : {dnc_series_roots, iterative_roots}) {
        CHECK(solve(F2, y2_plus_y, 1, 0).same_pairs(RootSet({R({0}, 1), R({1}, 1)})));
        CHECK(solve(F3, y_minus_x_sq, 3, 0).same_pairs(RootSet({R({0, 1}, 2)})));
        for (std::size_t d = 1; d <= 4; ++d) CHECK(solve(F3, y2_plus_1, d, 0).empty());
        CHECK(solve(F5, P(F5, 3, {{0}, {1}}), 3, 0).same_pairs(RootSet({R({0, 0, 0}, 1)})));
        CHECK_THROWS(solve(F5, P(F5, 3, {{0, 1}, {1}}).truncated(3), 0, 0));
        CHECK_THROWS(solve(F5, P(F5, 3, {{0, 1}, {0, 1}}), 3, 0));
    }
}

TEST_CASE("series_roots_trc examples") {
    CHECK(series_roots_trc(F2, y2_plus_y, 1) == RootSet({R({0}, 1), R({1}, 1)}));
    CHECK(series_roots_trc(F3, y_minus_x_sq, 3) == RootSet({R({0, 1}, 2)}));
    CHECK(series_roots_trc(F5, P(F5, 3, {{0}, {1}}), 3) == RootSet({R({0, 0, 0}, 1)}));
    CHECK_THROWS(series_roots_trc(F5, P(F5, 3, {{0, 1}, {0, 1}}), 3));
}

TEST_CASE("series_roots top level") {
    CHECK(series_roots(F3, P(F3, 2, {{0}, {0, 1}}), 2) == RootSet({R({0}, 1)}));
    CHECK(series_roots(F3, SeriesPoly(4), 4) == RootSet::whole_space());
    CHECK(series_roots(F2, P(F2, 2, {{0, 0}, {0, 0, 1}, {0, 0, 1}}).truncated(2), 2) == RootSet::whole_space());
    CHECK_THROWS_AS(series_roots(F3, y_minus_x_sq, 0), std::invalid_argument);
    CHECK_THROWS_AS(series_roots(F3, y_minus_x_sq, 4), std::invalid_argument);
}

TEST_CASE("linear_factor_shortcut") {
    auto r = linear_factor_shortcut(F5, {P(F5, 3, {{-1, -1}, {1}}), 0}, 3);
    REQUIRE(r);
    CHECK(*r == R({1, 1, 0}, 1));
    CHECK_FALSE(linear_factor_shortcut(F5, {P(F5, 3, {{0, 1}, {0}, {1}}), 0}, 3));
    r = linear_factor_shortcut(F5, {P(F5, 2, {{0}, {1}}), 0}, 2);
    REQUIRE(r);
    CHECK(*r == R({0, 0}, 1));
}

TEST_CASE("newton_lift") {
    const PrimeField F(998244353);
    Rng rng(31);
    const std::size_t d = 40;
    const auto f1 = testing::random_digits(F, rng, d);
    auto f2 = testing::random_digits(F, rng, d);
    f2[0] = F.add(f1[0], F.one());
    const SeriesPoly Q = mul(F, testing::linear(F, f1, d), testing::linear(F, f2, d));
    CHECK(newton_lift(F, Q, f1[0], d) == TruncSeries(f1));
    CHECK(newton_lift(F, Q, f2[0], d) == TruncSeries(f2));
    CHECK_THROWS(newton_lift(F, mul(F, Q, testing::linear(F, f1, d)), f1[0], d));
}

TEST_CASE("solvers agree with the oracle and with each other") {
    Rng rng(32);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 120; ++trial) {
            std::size_t d = 1 + rng() % 6;
            while (residue_count(F, d) > 20000) --d;
            const SeriesPoly Q = testing::random_instance(F, rng, 5, d);
            const RootSet fast = series_roots(F, Q, d);
            CHECK(agree(F, fast, Q, d));
            CHECK(is_basic_root_set(F, Q, d, fast));
            CHECK(fast.same_pairs(series_roots(F, Q, d, {0, true, Algorithm::dnc_reference})));
            CHECK(fast.same_pairs(series_roots(F, Q, d, {0, true, Algorithm::iterative_reference})));
            CHECK(fast == series_roots(F, Q, d, {0, false, Algorithm::fast}));

            std::size_t msum = 0;
            for (const Root& r : fast) {
                CHECK(r.m >= 1);
                msum += r.m;
            }
            CHECK(msum <= static_cast<std::size_t>(eval_x0(Q).degree()));
        }
    }
}

TEST_CASE("truncation invariance") {
    Rng rng(33);
    for (std::uint32_t p : {2u, 3u, 101u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t d = 1 + rng() % 12;
            const SeriesPoly Q = testing::random_instance(F, rng, 6, d);
            const SeriesPoly noisy =
                add(F, Q.lifted(2 * d), multiply_by_x_power(testing::random_poly(F, rng, 6, 2 * d), d));
            CHECK(series_roots_trc(F, noisy, d) == series_roots_trc(F, Q, d));
        }
    }
}

TEST_CASE("large field, repeated roots") {
    const PrimeField F(998244353);
    for (std::size_t n : {2u, 5u, 16u}) {
        const std::size_t d = 24;
        const SeriesPoly Q = repeated_root_family(F, n, d, n);
        const RootSet fast = series_roots(F, Q, d);
        // n - 2 simple roots at full precision and the double root at ceil(d/2)
        REQUIRE(fast.size() == n - 1);
        CHECK(fast[0].t() == d / 2);
        CHECK(fast[0].m == 2);
        for (std::size_t i = 1; i < fast.size(); ++i) CHECK(fast[i].t() == d);
        CHECK(fast.same_pairs(dnc_series_roots(F, Q, d)));
        CHECK(fast.same_pairs(iterative_roots(F, Q, d)));
        for (const Root& r : fast) CHECK(shift_y(F, Q, r.f, r.t(), d).is_zero());
    }
}
