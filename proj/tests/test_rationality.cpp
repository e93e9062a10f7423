#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivic/measures.hpp"
#include "motivic/rationality.hpp"

using namespace motivic;

namespace {

std::vector<MElement> curve_sequence(long genus, unsigned horizon) {
    return mu1_sym_sequence(HodgeData{1, {Int(1), Int(genus)}, {}, "curve"}, horizon);
}

std::vector<MElement> k3_sequence(unsigned horizon) {
    return mu1_sym_sequence(HodgeData{2, {Int(1), Int(0), Int(1)}, {}, "K3"}, horizon);
}

std::vector<MElement> abelian_sequence(unsigned horizon) {
    return mu1_sym_sequence(HodgeData{2, {Int(1), Int(2), Int(1)}, {}, "abelian"}, horizon);
}

MElement power_of_one_plus_s(unsigned i) {
    GradedElement base = GradedElement::from_dense({Int(1), Int(1)});
    GradedElement acc = ring_ops<GradedElement>::one();
    for (unsigned k = 0; k < i; ++k) acc = acc * base;
    return MElement(acc);
}

}  // namespace

TEST_CASE("check_periodic_ratio on the stock sequences") {
    SUBCASE("geometric growth (1+s)^i passes from the start") {
        std::vector<MElement> g;
        for (unsigned i = 0; i <= 12; ++i) g.push_back(power_of_one_plus_s(i));
        CHECK(check_periodic_ratio(g, 1, 0, 12));
        CHECK(check_periodic_ratio(g, 2, 0, 12));
    }

    SUBCASE("elliptic curve passes with i0 = 1") {
        auto g = curve_sequence(1, 12);
        CHECK(check_periodic_ratio(g, 1, 1, 12));
        CHECK(check_periodic_ratio(g, 1, 0, 12));  // index 0 itself is excluded
    }

    SUBCASE("genus 2 fails until the plateau") {
        auto g = curve_sequence(2, 12);
        CHECK_FALSE(check_periodic_ratio(g, 1, 0, 12));
        CHECK(check_periodic_ratio(g, 1, 2, 12));
    }

    SUBCASE("K3 never passes") {
        auto g = k3_sequence(20);
        for (unsigned p = 1; p <= 4; ++p)
            for (unsigned i0 = 0; i0 <= 8; ++i0) CHECK_FALSE(check_periodic_ratio(g, p, i0, 20));
    }

    SUBCASE("errors") {
        auto g = curve_sequence(1, 12);
        CHECK_THROWS_AS(check_periodic_ratio(g, 1, 10, 12), HorizonTooSmall);
        CHECK_THROWS_AS(check_periodic_ratio(g, 1, 0, 15), InvalidInput);
        CHECK_THROWS_AS(check_periodic_ratio(g, 0, 0, 12), InvalidInput);
    }
}

TEST_CASE("context validation") {
    AnalysisContext ctx;
    ctx.horizon = 28;  // needs 2*8 + 12 < horizon
    CHECK_THROWS_AS(ctx.validate(), InvalidInput);
    ctx.horizon = 29;
    CHECK_NOTHROW(ctx.validate());
    ctx.p_max = 0;
    CHECK_THROWS_AS(ctx.validate(), InvalidInput);
}

TEST_CASE("analyze reports the stabilization offset") {
    AnalysisContext ctx;
    ctx.horizon = 40;

    SUBCASE("constant sequence is consistent from the start") {
        auto verdict = analyze(curve_sequence(0, 40), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::RationalConsistent);
        CHECK(verdict.p == 1);
        CHECK(verdict.i0 == 0);
        CHECK(verdict.depth == 39);
    }

    SUBCASE("elliptic curve stabilizes after the first coefficient") {
        auto verdict = analyze(curve_sequence(1, 40), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::RationalConsistent);
        CHECK(verdict.p == 1);
        CHECK(verdict.i0 == 1);
    }

    SUBCASE("genus 3 stabilizes at m = 3") {
        auto verdict = analyze(curve_sequence(3, 40), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::RationalConsistent);
        CHECK(verdict.p == 1);
        CHECK(verdict.i0 == 3);
    }
}

TEST_CASE("analyze issues certificates only with the boundedness premise") {
    AnalysisContext ctx;
    ctx.horizon = 60;

    SUBCASE("K3 without the premise stays inconclusive") {
        auto verdict = analyze(k3_sequence(60), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::Inconclusive);
        CHECK(verdict.premises.at("degrees_unbounded_within_horizon"));
        CHECK_FALSE(verdict.premises.at("bounded_coefficients"));
    }

    SUBCASE("K3 with the premise is certified") {
        ctx.bounded_coefficients = true;
        auto verdict = analyze(k3_sequence(60), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::IrrationalCertificate);
        CHECK(verdict.premises.at("bounded_coefficients"));
        CHECK(verdict.premises.at("degrees_unbounded_within_horizon"));
    }

    SUBCASE("abelian surface with the premise is certified") {
        ctx.bounded_coefficients = true;
        auto verdict = analyze(abelian_sequence(60), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::IrrationalCertificate);
    }

    SUBCASE("growth bound is verified when supplied") {
        ctx.bounded_coefficients = true;
        ctx.growth_constant = Rat(1);  // K3 degrees are exactly 2m
        auto verdict = analyze(k3_sequence(60), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::IrrationalCertificate);
        CHECK(verdict.premises.at("growth_bound_2mC"));

        ctx.growth_constant = Rat(2);  // 2m >= 4m fails
        verdict = analyze(k3_sequence(60), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::Inconclusive);
        CHECK_FALSE(verdict.premises.at("growth_bound_2mC"));
    }

    SUBCASE("curves never look unbounded") {
        ctx.bounded_coefficients = true;
        ctx.horizon = 40;
        auto verdict = analyze(curve_sequence(5, 40), ctx);
        CHECK(verdict.kind == RationalityVerdict::Kind::RationalConsistent);
    }
}

TEST_CASE("degree_and_bound_profile") {
    auto profile = degree_and_bound_profile(k3_sequence(10), 20);
    REQUIRE(profile.degrees.size() == 11);
    for (unsigned m = 0; m <= 10; ++m) CHECK(profile.degrees[m] == 2 * m);
    for (unsigned r = 0; r <= 20; ++r)
        CHECK(profile.per_degree_max[r] == (r % 2 == 0 ? 1 : 0));

    auto genus2 = degree_and_bound_profile(curve_sequence(2, 6), 2);
    CHECK(genus2.degrees == std::vector<std::size_t>{0, 1, 2, 2, 2, 2, 2});

    auto abelian = degree_and_bound_profile(abelian_sequence(4), 8);
    CHECK(abelian.degrees == std::vector<std::size_t>{0, 2, 4, 6, 8});
}

TEST_CASE("analyze is deterministic and self-consistent") {
    AnalysisContext ctx;
    ctx.horizon = 40;
    auto g = curve_sequence(4, 40);
    auto v1 = analyze(g, ctx);
    auto v2 = analyze(g, ctx);
    CHECK(v1.kind == v2.kind);
    CHECK(v1.p == v2.p);
    CHECK(v1.i0 == v2.i0);
    // The reported (p, i0) really does pass the public check.
    CHECK(check_periodic_ratio(g, v1.p, v1.i0, ctx.horizon));
}
