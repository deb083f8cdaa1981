#include <doctest.h>

#include <memory>
#include <random>
#include <set>

#include "chainring/chain_ring.hpp"

using namespace chainring;

namespace {

std::shared_ptr<const Context> ctx_of(uint32_t p, uint32_t s, uint32_t k, uint64_t n,
                                      uint64_t w) {
    return std::make_shared<Context>(build_context(p, s, k, n, w));
}

}  // namespace

TEST_SUITE_BEGIN("chain_ring");

TEST_CASE("Z_8[x]/<x^2-3>: defining polynomial and basic arithmetic") {
    auto ctx = ctx_of(2, 3, 1, 1, 1);  // f_1 = y - 1, eta = 3
    ChainRing R(ctx, 0, Variant::plain);
    CHECK(R.dim() == 2);
    CHECK(R.nu() == 6);
    CHECK(to_text(R.defining_poly()) == "5,0,1");  // x^2 - 3 = x^2 + 5
    // x * x = 3
    CHECK((R.x() * R.x()) == R.one().scaled(3));
    ChainElem a = R.from_poly(parse_poly("1,1", ctx->mod));
    CHECK((a * R.zero()).is_zero());
    CHECK(a.pow(1) == a);
    CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("pi nilpotency index is exactly nu") {
    for (auto [p, s, k, n, w] :
         {std::tuple<uint32_t, uint32_t, uint32_t, uint64_t, uint64_t>{2, 2, 1, 1, 1},
          {2, 3, 1, 7, 1},
          {3, 2, 1, 2, 1}}) {
        auto ctx = ctx_of(p, s, k, n, w);
        for (size_t i = 0; i < ctx->r; ++i) {
            for (Variant v : {Variant::plain, Variant::hat}) {
                ChainRing R(ctx, i, v);
                CHECK(R.pi().pow(R.nu()).is_zero());
                CHECK_FALSE(R.pi().pow(R.nu() - 1).is_zero());
            }
        }
    }
}

TEST_CASE("digit expansion fixtures") {
    auto ctx = ctx_of(2, 3, 1, 1, 1);
    ChainRing R(ctx, 0, Variant::plain);
    SUBCASE("zero") {
        auto d = R.digits(R.zero());
        REQUIRE(d.size() == 6);
        for (const auto& x : d) CHECK(x.is_zero());
    }
    SUBCASE("pi itself") {
        auto d = R.digits(R.pi());
        CHECK(d[0].is_zero());
        CHECK(d[1] == PolyFp(2, {1}));
        for (size_t j = 2; j < d.size(); ++j) CHECK(d[j].is_zero());
    }
    SUBCASE("the constant 2 has valuation exactly 2") {
        ChainElem two = R.one().scaled(2);
        auto d = R.digits(two);
        CHECK(d[0].is_zero());
        CHECK(d[1].is_zero());
        CHECK_FALSE(d[2].is_zero());
        CHECK(R.val_pi(two) == 2);
    }
}

TEST_CASE("digits round-trip") {
    SUBCASE("exhaustive on a ring with 4096 elements") {
        auto ctx = ctx_of(2, 3, 1, 1, 1);
        ChainRing R(ctx, 0, Variant::plain);
        uint64_t ps = ctx->mod.ps();
        for (uint64_t c0 = 0; c0 < ps; ++c0)
            for (uint64_t c1 = 0; c1 < ps; ++c1) {
                ChainElem e = R.from_poly(PolyZps(ctx->mod, {c0, c1}));
                auto d = R.digits(e);
                CHECK(reconstruct(R, d) == e);
            }
    }
    SUBCASE("random elements in a degree-3 factor ring") {
        auto ctx = ctx_of(2, 3, 1, 7, 1);
        ChainRing R(ctx, 1, Variant::plain);  // d = 3, dim = 6
        std::mt19937_64 rng(5);
        for (int iter = 0; iter < 100; ++iter) {
            std::vector<uint64_t> c(R.dim());
            for (auto& x : c) x = rng() % ctx->mod.ps();
            ChainElem e = R.from_poly(PolyZps(ctx->mod, c));
            CHECK(reconstruct(R, R.digits(e)) == e);
        }
    }
}

TEST_CASE("units and inverses") {
    auto ctx = ctx_of(2, 3, 1, 1, 1);
    ChainRing R(ctx, 0, Variant::plain);
    CHECK(R.is_unit(R.one()));
    CHECK_FALSE(R.is_unit(R.pi()));
    CHECK_THROWS_AS(R.inverse(R.pi()), NotAUnit);
    CHECK(R.inverse(R.one()) == R.one());
    // x^{-1} = 3x since x * 3x = 3 * 3 = 9 = 1
    CHECK(R.inverse(R.x()) == R.x().scaled(3));
    CHECK(R.x_inverse() * R.x() == R.one());

    SUBCASE("random units invert exactly") {
        auto big = ctx_of(2, 3, 1, 7, 1);
        ChainRing R2(big, 1, Variant::plain);
        std::mt19937_64 rng(9);
        int found = 0;
        while (found < 50) {
            std::vector<uint64_t> c(R2.dim());
            for (auto& x : c) x = rng() % big->mod.ps();
            ChainElem e = R2.from_poly(PolyZps(big->mod, c));
            if (!R2.is_unit(e)) continue;
            ++found;
            CHECK(R2.inverse(e) * e == R2.one());
        }
    }
}

TEST_CASE("theta unit: p * theta = pi^{p^k} and theta invertible") {
    SUBCASE("worked 2x2 example") {
        auto ctx = ctx_of(2, 3, 1, 1, 1);
        ChainRing R(ctx, 0, Variant::plain);
        ChainElem th = R.theta_unit();
        // (x-1)^2 = 4 - 2x = 2 (2 - x): theta = 2 - x = 2 + 7x
        CHECK(th.rep() == parse_poly("2,7", ctx->mod));
    }
    SUBCASE("every factor of several contexts") {
        for (auto [p, s, k, n, w] :
             {std::tuple<uint32_t, uint32_t, uint32_t, uint64_t, uint64_t>{2, 3, 1, 7, 1},
              {2, 2, 1, 3, 1},
              {3, 2, 1, 2, 1},
              {2, 2, 2, 3, 1},
              {5, 2, 1, 3, 2}}) {
            auto ctx = ctx_of(p, s, k, n, w);
            for (size_t i = 0; i < ctx->r; ++i)
                for (Variant v : {Variant::plain, Variant::hat}) {
                    ChainRing R(ctx, i, v);
                    ChainElem th = R.theta_unit();
                    CHECK(th.scaled(p) == R.pi().pow(ctx->pk));
                    CHECK(R.is_unit(th));
                }
        }
    }
}

TEST_CASE("in_pi_power") {
    auto ctx = ctx_of(2, 3, 1, 1, 1);
    ChainRing R(ctx, 0, Variant::plain);
    CHECK(R.in_pi_power(R.zero(), 6));
    CHECK(R.in_pi_power(R.zero(), 0));
    CHECK_FALSE(R.in_pi_power(R.pi(), 2));
    CHECK(R.in_pi_power(R.pi(), 1));
    // p = pi^{p^k} * theta^{-1}, so p lies in <pi^{p^k}>
    CHECK(R.in_pi_power(R.one().scaled(2), ctx->pk));
    CHECK_THROWS_AS(R.in_pi_power(R.one(), 7), InvalidRange);
}

TEST_CASE("Delta_l enumeration counts and contents") {
    auto ctx = ctx_of(2, 3, 1, 7, 1);
    SUBCASE("l=1, d=1: only the constant 1") {
        ChainRing R(ctx, 0, Variant::plain);
        DeltaEnumerator de(R, 1);
        REQUIRE(de.next());
        CHECK(de.element() == R.one());
        CHECK_FALSE(de.next());
    }
    SUBCASE("l=1, d=3: the 7 nonzero residue polynomials") {
        ChainRing R(ctx, 1, Variant::plain);
        DeltaEnumerator de(R, 1);
        std::set<std::string> seen;
        while (de.next()) seen.insert(to_text(de.element()));
        CHECK(seen.size() == 7);
        CHECK(DeltaEnumerator::count(2, 3, 1) == 7);
    }
    SUBCASE("l=2, d=1: two elements, distinct, digits valid") {
        ChainRing R(ctx, 0, Variant::plain);
        DeltaEnumerator de(R, 2);
        std::vector<ChainElem> elems;
        while (de.next()) {
            elems.push_back(de.element());
            CHECK_FALSE(de.digits()[0].is_zero());
        }
        REQUIRE(elems.size() == 2);
        CHECK(DeltaEnumerator::count(2, 1, 2) == 2);
        CHECK_FALSE(elems[0] == elems[1]);
        // all Delta elements are units with val 0
        for (const auto& e : elems) CHECK(R.is_unit(e));
    }
    SUBCASE("count formula matches enumeration on a grid") {
        for (size_t i : {size_t(0), size_t(1)}) {
            ChainRing R(ctx, i, Variant::plain);
            for (uint64_t l = 1; l <= 3; ++l) {
                DeltaEnumerator de(R, l);
                uint64_t c = 0;
                std::set<std::string> uniq;
                while (de.next()) {
                    ++c;
                    uniq.insert(to_text(de.element()));
                }
                CHECK(c == DeltaEnumerator::count(2, R.d(), l));
                CHECK(uniq.size() == c);  // distinct elements
            }
        }
    }
    SUBCASE("range errors") {
        ChainRing R(ctx, 0, Variant::plain);
        CHECK_THROWS_AS(DeltaEnumerator(R, 0), InvalidRange);
        CHECK_THROWS_AS(DeltaEnumerator(R, 7), InvalidRange);
    }
}

TEST_CASE("ideal sizes |<pi^l>| = p^{d(nu-l)} by exhaustive membership") {
    auto ctx = ctx_of(2, 2, 1, 1, 1);  // ring Z_4[x]/<x^2+1>, 16 elements
    ChainRing R(ctx, 0, Variant::plain);
    uint64_t ps = ctx->mod.ps();
    for (uint64_t l = 0; l <= R.nu(); ++l) {
        uint64_t count = 0;
        for (uint64_t c0 = 0; c0 < ps; ++c0)
            for (uint64_t c1 = 0; c1 < ps; ++c1)
                if (R.in_pi_power(R.from_poly(PolyZps(ctx->mod, {c0, c1})), l)) ++count;
        uint64_t expect = 1;
        for (uint64_t e = 0; e < R.d() * (R.nu() - l); ++e) expect *= 2;
        CHECK(count == expect);
    }
}

TEST_CASE("quotient unit counts match (p^d - 1) p^{(l-1)d} exhaustively") {
    auto ctx = ctx_of(2, 2, 1, 1, 1);  // 16-element ring
    ChainRing R(ctx, 0, Variant::plain);
    uint64_t ps = ctx->mod.ps();
    for (uint64_t l = 1; l <= R.nu(); ++l) {
        std::set<std::vector<uint32_t>> classes, unit_classes;
        for (uint64_t c0 = 0; c0 < ps; ++c0)
            for (uint64_t c1 = 0; c1 < ps; ++c1) {
                auto d = R.digits(R.from_poly(PolyZps(ctx->mod, {c0, c1})));
                std::vector<uint32_t> prefix;
                for (uint64_t j = 0; j < l; ++j)
                    for (uint32_t t = 0; t < R.d(); ++t)
                        prefix.push_back(d[j].coeff(t));
                classes.insert(prefix);
                if (!d[0].is_zero()) unit_classes.insert(prefix);
            }
        uint64_t expect_classes = 1, expect_units = 1;
        for (uint64_t e = 0; e < R.d() * l; ++e) expect_classes *= 2;
        expect_units = expect_classes / 2;  // (p^d - 1) p^{(l-1)d} with p=2, d=1
        CHECK(classes.size() == expect_classes);
        CHECK(unit_classes.size() == expect_units);
        CHECK(unit_classes.size() == DeltaEnumerator::count(2, R.d(), l));
    }
}

TEST_CASE("ring mismatch is rejected") {
    auto ctx = ctx_of(2, 3, 1, 7, 1);
    ChainRing R0(ctx, 0, Variant::plain);
    ChainRing R1(ctx, 1, Variant::plain);
    CHECK_THROWS_AS(R0.one() + R1.one(), RingMismatch);
}

TEST_SUITE_END();
