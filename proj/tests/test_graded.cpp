#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "motivic/graded.hpp"

using namespace motivic;

namespace {

GradedElement dense(std::vector<long> dims) {
    std::vector<Int> v(dims.begin(), dims.end());
    return GradedElement::from_dense(v);
}

GradedElement random_graded(std::mt19937_64& rng, unsigned max_degree, long max_abs,
                            bool nonnegative = false) {
    std::uniform_int_distribution<long> dim(nonnegative ? 0 : -max_abs, max_abs);
    GradedElement x;
    for (unsigned p = 0; p <= max_degree; ++p) x += GradedElement::monomial(p, Int(dim(rng)));
    return x;
}

}  // namespace

TEST_CASE("graded elements store no zeros and compare structurally") {
    GradedElement x = dense({1, 2});
    GradedElement y = dense({0, 2});
    CHECK(x - y == GradedElement::constant(Int(1)));
    CHECK((x - x).is_zero());
    CHECK(x.coeff(5) == 0);
    CHECK(dense({0, 0, 0}).is_zero());
    CHECK(dense({1, 0, 3}).dims().size() == 2);
    CHECK(x.degree() == 1);
    CHECK(dense({1, 0, 3}).dense() == std::vector<Int>{Int(1), Int(0), Int(3)});
}

TEST_CASE("graded multiplication is polynomial convolution") {
    CHECK(dense({1, 1}) * dense({1, 1}) == dense({1, 2, 1}));
    CHECK(dense({1, -1}) * dense({1, 1}) == dense({1, 0, -1}));
    CHECK(dense({1, 2}) * GradedElement() == GradedElement());
}

TEST_CASE("sym_dim and ext_dim") {
    CHECK(sym_dim(Int(1), 5) == 1);
    CHECK(sym_dim(Int(2), 3) == 4);
    CHECK(sym_dim(Int(3), 2) == 6);
    CHECK(sym_dim(Int(0), 0) == 1);
    CHECK(sym_dim(Int(0), 4) == 0);
    CHECK(ext_dim(Int(4), 2) == 6);
    CHECK(ext_dim(Int(2), 3) == 0);
    CHECK(ext_dim(Int(0), 0) == 1);
    CHECK_THROWS_AS(sym_dim(Int(-1), 2), NegativeDimension);
    CHECK_THROWS_AS(ext_dim(Int(-3), 1), NegativeDimension);
}

// Frozen values below were derived independently by the symmetric-group
// trace enumeration (see invariants_dim_bruteforce and its tests); the
// full sweep comparing the two computations lives in the acceptance run.
TEST_CASE("lambda_graded on the running examples") {
    CHECK(lambda_graded(2, dense({1, 2})) == dense({1, 2, 1}));
    CHECK(lambda_graded(3, dense({1, 1})) == dense({1, 1}));
    CHECK(lambda_graded(2, dense({1, 0, 1})) == dense({1, 0, 1, 0, 1}));
    CHECK(lambda_graded(3, dense({1, 0, 1})) == dense({1, 0, 1, 0, 1, 0, 1}));
    CHECK(lambda_graded(0, dense({5, 3})) == GradedElement::constant(Int(1)));
    CHECK(lambda_graded(4, GradedElement()) == GradedElement());
}

TEST_CASE("lambda^1 is the identity") {
    std::mt19937_64 rng(71001);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_graded(rng, 4, 4);
        CHECK(lambda_graded(1, x) == x);
    }
}

TEST_CASE("lambda addition rule holds exactly") {
    std::mt19937_64 rng(71002);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_graded(rng, 3, 3);
        auto y = random_graded(rng, 3, 3);
        for (unsigned n = 0; n <= 5; ++n) {
            GradedElement rhs;
            for (unsigned i = 0; i <= n; ++i)
                rhs += lambda_graded(i, x) * lambda_graded(n - i, y);
            CHECK(lambda_graded(n, x + y) == rhs);
        }
    }
}

TEST_CASE("lambda_t(x) lambda_t(-x) = 1 through the horizon") {
    std::mt19937_64 rng(71003);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = random_graded(rng, 4, 3);
        auto prod = lambda_graded_series(x, 8) * lambda_graded_series(-x, 8);
        CHECK(prod == TruncatedSeries<GradedElement>::one(8));
    }
}

TEST_CASE("coefficients stay nonnegative on honest even-degree spaces") {
    std::mt19937_64 rng(71004);
    for (int trial = 0; trial < 60; ++trial) {
        GradedElement x;
        std::uniform_int_distribution<long> dim(0, 4);
        for (unsigned p = 0; p <= 2; ++p) x += GradedElement::monomial(2 * p, Int(dim(rng)));
        for (unsigned n = 0; n <= 6; ++n) {
            auto lam = lambda_graded(n, x);
            for (const auto& [p, v] : lam.dims()) {
                (void)p;
                CHECK(v > 0);
            }
        }
    }
}

TEST_CASE("degree law: bounded by n deg(x), exact for even positive top degree") {
    std::mt19937_64 rng(71005);
    for (int trial = 0; trial < 120; ++trial) {
        auto x = random_graded(rng, 4, 3);
        if (x.is_zero()) continue;
        for (unsigned n = 1; n <= 5; ++n) {
            auto lam = lambda_graded(n, x);
            if (!lam.is_zero()) CHECK(lam.degree() <= n * x.degree());
            if (x.degree() % 2 == 0 && x.coeff(x.degree()) > 0)
                CHECK(lam.degree() == n * x.degree());
        }
    }
}

TEST_CASE("adams operations on lines carry the parity sign") {
    for (unsigned p = 0; p <= 3; ++p) {
        auto line = GradedElement::monomial(p, Int(1));
        for (unsigned k = 1; k <= 4; ++k) {
            Int sign = (p % 2 == 1 && k % 2 == 0) ? -1 : 1;
            CHECK(adams_graded(k, line) == GradedElement::monomial(k * p, sign));
        }
    }
    CHECK(adams_graded(3, dense({1, 2})) == dense({1, 0, 0, 2}));
    CHECK_THROWS_AS(adams_graded(0, dense({1, 1})), InvalidInput);
}

TEST_CASE("adams operations are additive, and empirically multiplicative") {
    std::mt19937_64 rng(71006);
    for (int trial = 0; trial < 120; ++trial) {
        auto x = random_graded(rng, 3, 3);
        auto y = random_graded(rng, 3, 3);
        for (unsigned k = 1; k <= 4; ++k) {
            CHECK(adams_graded(k, x + y) == adams_graded(k, x) + adams_graded(k, y));
            CHECK(adams_graded(k, x * y) == adams_graded(k, x) * adams_graded(k, y));
        }
        CHECK(adams_graded(1, x) == x);
    }
}
