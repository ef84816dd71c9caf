#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sroots/affine.hpp"
#include "sroots/solver.hpp"
#include "support.hpp"

using namespace sroots;
using sroots::testing::Rng;

namespace {

SeriesPoly P(const PrimeField& F, std::size_t prec, std::vector<std::vector<std::int64_t>> rows) {
    return SeriesPoly::from_rows(F, prec, rows);
}

void check_reference_identity(const PrimeField& F, const SeriesPoly& Q, std::size_t k) {
    const auto [A, B] = affine_factor_reference(F, Q, k);
    CHECK(A.is_monic());
    CHECK(A.degree() == eval_x0(Q).degree());
    CHECK(eval_x0(B).degree() == 0);
    CHECK(mul(F, A, B) == Q.truncated(k));
}

}  // namespace

TEST_CASE("affine_factor_reference examples") {
    const PrimeField F5(5), F7(7);
    auto r = affine_factor_reference(F7, P(F7, 3, {{-1, -1}, {1, 1}}), 3);
    CHECK(r.factor == P(F7, 3, {{-1}, {1}}));
    CHECK(r.cofactor == P(F7, 3, {{1, 1}}));

    r = affine_factor_reference(F7, P(F7, 2, {{0}, {1}, {0, 1}}), 2);
    CHECK(r.factor == P(F7, 2, {{0}, {1}}));
    CHECK(r.cofactor == P(F7, 2, {{1}, {0, 1}}));

    r = affine_factor_reference(F5, P(F5, 2, {{0, 2}, {0, 0}, {2}, {0, 1}}), 2);
    CHECK(r.factor == P(F5, 2, {{0, 1}, {0}, {1}}));
    CHECK(r.cofactor == P(F5, 2, {{2}, {0, 1}}));

    CHECK_THROWS_WITH_AS(affine_factor_reference(F5, P(F5, 2, {{0, 1}, {0, 1}}), 2), "zero reduction",
                         std::domain_error);
}

TEST_CASE("affine_factor_reference identity and truncation stability") {
    Rng rng(21);
    for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t k = 1 + rng() % 8;
            const SeriesPoly Q = testing::random_instance(F, rng, 6, k);
            check_reference_identity(F, Q, k);
            const std::size_t k2 = 1 + rng() % k;
            CHECK(affine_factor_reference(F, Q, k).factor.truncated(k2) == affine_factor_reference(F, Q, k2).factor);
        }
    }
}

TEST_CASE("affine_fac_of_shifts examples") {
    const PrimeField F3(3), F5(5);
    auto out = affine_fac_of_shifts(F3, 3, P(F3, 3, {{0, 0, 1}, {0, 1}, {1}}), {{{Fp{0}}, 1, 2}});
    REQUIRE(out.size() == 1);
    CHECK(out[0].valuation == 2);
    CHECK(out[0].factor == P(F3, 1, {{1}, {1}, {1}}));

    out = affine_fac_of_shifts(F5, 4, P(F5, 4, {{0}, {1}}), {{{Fp{0}, Fp{0}}, 2, 1}});
    CHECK(out[0].valuation == 2);
    CHECK(out[0].factor == P(F5, 2, {{0}, {1}}));

    out = affine_fac_of_shifts(F5, 2, P(F5, 2, {{0, -1}, {1}}), {{{Fp{0}, Fp{1}}, 2, 1}});
    CHECK(out[0].vanishes());
    CHECK(out[0].valuation == 2);

    CHECK(affine_fac_of_shifts(F5, 2, P(F5, 2, {{0, -1}, {1}}), {}).empty());
    CHECK_THROWS(affine_fac_of_shifts(F5, 2, P(F5, 2, {{0, -1}, {0, 1}}), {{{Fp{0}}, 1, 1}}));
}

// Requests come from a genuine reduced root set at precision ceil(d/2), as
// in the solver.
TEST_CASE("affine_fac_of_shifts matches the reference on expanded shifts") {
    Rng rng(22);
    std::size_t compared = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 101u, 998244353u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t d = 2 + rng() % 15;
            const SeriesPoly Q = testing::random_instance(F, rng, 6, d);
            const std::size_t h = (d + 1) / 2;
            const RootSet outer = series_roots_trc(F, Q.truncated(h), h);
            std::vector<ShiftRequest> req;
            for (const Root& r : outer) req.push_back({r.f, r.t(), r.m});
            const auto got = affine_fac_of_shifts(F, d, Q, req);
            REQUIRE(got.size() == req.size());
            for (std::size_t i = 0; i < req.size(); ++i) {
                const SeriesPoly shift = shift_y(F, Q, req[i].f, req[i].t, d);
                const std::size_t s = x_valuation(shift);
                if (s >= d) {
                    CHECK(got[i].vanishes());
                    CHECK(got[i].valuation == d);
                    continue;
                }
                const SeriesPoly stripped = divide_by_x_power(shift, s);
                CHECK(got[i].valuation == s);
                CHECK(got[i].factor == affine_factor_reference(F, stripped, d - s).factor);
                CHECK(got[i].factor.degree() <= static_cast<int>(req[i].m));
                CHECK(got[i].factor.degree() == eval_x0(stripped).degree());
                ++compared;
            }
        }
    }
    CHECK(compared > 300);
}
