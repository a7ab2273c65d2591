#include <doctest.h>

#include <cmath>
#include <random>

#include "wigloc/rotation.hpp"

using namespace wigloc;

namespace {

const QSqrt2 kOne{Rational(1)};

MultiIndex random_of_order(std::mt19937_64& rng, int n, int lam) {
    const auto space = multi_indices_of_order(n, lam);
    return space[rng() % space.size()];
}

}  // namespace

TEST_SUITE("rotation") {

TEST_CASE("field arithmetic in Q(sqrt 2)") {
    const QSqrt2 root = QSqrt2::sqrt2();
    CHECK(root * root == QSqrt2{Rational(2)});
    const QSqrt2 x{Rational(1, 2), Rational(-3)};
    const QSqrt2 y{Rational(2), Rational(1, 3)};
    const QSqrt2 p = x * y;
    // (1/2 - 3 sqrt2)(2 + sqrt2/3) = 1 + sqrt2/6 - 6 sqrt2 - 2 = -1 - (35/6) sqrt2
    CHECK(p == QSqrt2{Rational(-1), Rational(-35, 6)});
    CHECK((x + y - x - y).is_zero());
    CHECK(x.to_double() == doctest::Approx(0.5 - 3.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("eigenstates in polynomial form") {
    const GaussHermitePoly g0 = hermite_to_poly({0});
    CHECK(g0.lambda == 0);
    CHECK(g0.norm_sq == 1);
    CHECK(g0.coeffs.at({0}) == kOne);

    // first excited state: table 2x with squared norm 2, i.e. sqrt2 x
    const GaussHermitePoly g1 = hermite_to_poly({1});
    CHECK(g1.coeffs.at({1}) == QSqrt2{Rational(2)});
    CHECK(g1.norm_sq == 2);

    // second: 4x^2 - 2 over sqrt 8, i.e. (2x^2 - 1) sqrt2 / 2
    const GaussHermitePoly g2 = hermite_to_poly({2});
    CHECK(g2.coeffs.at({2}) == QSqrt2{Rational(4)});
    CHECK(g2.coeffs.at({0}) == QSqrt2{Rational(-2)});
    CHECK(g2.norm_sq == 8);

    CHECK_THROWS_AS(hermite_to_poly({31}), std::out_of_range);
}

TEST_CASE("round trip through the eigenbasis") {
    for (const MultiIndex& mu : {MultiIndex{0}, MultiIndex{4}, MultiIndex{10}, MultiIndex{2, 3},
                                 MultiIndex{1, 0, 4}, MultiIndex{3, 3, 3}}) {
        const HermiteExpansion exp = poly_to_hermite(hermite_to_poly(mu));
        CHECK(exp.amp_sq_total() == kOne);
        for (const auto& t : exp.terms) {
            if (t.nu == mu) {
                CHECK(t.d == kOne);
                CHECK(t.amp_sq == kOne);
                CHECK(t.c == doctest::Approx(1.0).epsilon(1e-15));
            } else {
                CHECK(t.amp_sq.is_zero());
            }
        }
    }
}

TEST_CASE("quarter-turn rotation of the basic states") {
    const PlaneRotation rot{0, 1, kQuarterTurn};

    SUBCASE("single excitation splits evenly") {
        const HermiteExpansion exp = poly_to_hermite(apply_rotation(hermite_to_poly({1, 0}), rot));
        const ExpansionTerm* a = exp.find({1, 0});
        const ExpansionTerm* b = exp.find({0, 1});
        REQUIRE(a != nullptr);
        REQUIRE(b != nullptr);
        CHECK(a->amp_sq == QSqrt2{Rational(1, 2)});
        CHECK(b->amp_sq == QSqrt2{Rational(1, 2)});
        CHECK(a->c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(b->c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(exp.amp_sq_total() == kOne);
    }

    SUBCASE("radial states are fixed") {
        const GaussHermitePoly g = apply_rotation(hermite_to_poly({0, 0}), rot);
        CHECK(g.coeffs.size() == 1);
        CHECK(g.coeffs.at({0, 0}) == kOne);
    }

    SUBCASE("the (1,1) state maps to the difference of doubles") {
        const HermiteExpansion exp = poly_to_hermite(apply_rotation(hermite_to_poly({1, 1}), rot));
        const ExpansionTerm* hi = exp.find({2, 0});
        const ExpansionTerm* mid = exp.find({1, 1});
        const ExpansionTerm* lo = exp.find({0, 2});
        REQUIRE(hi != nullptr);
        REQUIRE(lo != nullptr);
        CHECK(hi->c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(lo->c == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(hi->amp_sq == QSqrt2{Rational(1, 2)});
        CHECK(lo->amp_sq == QSqrt2{Rational(1, 2)});
        CHECK(mid->d.is_zero());
        CHECK(exp.amp_sq_total() == kOne);
    }

    SUBCASE("bad inputs") {
        CHECK_THROWS_AS(apply_rotation(hermite_to_poly({1, 0}), PlaneRotation{0, 2, kQuarterTurn}),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_rotation(hermite_to_poly({1, 0}), PlaneRotation{0, 1, 0.3}),
                        std::invalid_argument);
    }
}

TEST_CASE("unitarity is exact for every class up to six quanta") {
    for (int n : {2, 3}) {
        for (int lam = 0; lam <= 6; ++lam) {
            for (const MultiIndex& mu : multi_indices_of_order(n, lam)) {
                for (int b = 1; b < n; ++b) {
                    const PlaneRotation rot{0, b, kQuarterTurn};
                    const HermiteExpansion exp =
                        poly_to_hermite(apply_rotation(hermite_to_poly(mu), rot));
                    CHECK(exp.amp_sq_total() == kOne);
                }
            }
        }
    }
}

TEST_CASE("floating-point path handles arbitrary angles") {
    std::mt19937_64 rng(0xA11CE);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + int(rng() % 2);
        const int lam = 1 + int(rng() % 5);
        const MultiIndex mu = random_of_order(rng, n, lam);
        const PlaneRotation rot{0, 1 + int(rng() % (n - 1)), angle(rng)};
        const NumericExpansion exp =
            poly_to_hermite_numeric(apply_rotation_numeric(to_numeric(hermite_to_poly(mu)), rot));
        CHECK(exp.residual <= 1e-9);
        double total = 0.0;
        for (const auto& [nu, c] : exp.terms) total += c * c;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("eigenspace violations are detected") {
    GaussHermitePoly f = hermite_to_poly({2, 0});
    f.coeffs[{1, 0}] += QSqrt2{Rational(1, 3)};  // inject a stray lower-degree monomial
    CHECK_THROWS_AS(poly_to_hermite(f), std::logic_error);
}

TEST_CASE("maximizer chains") {
    SUBCASE("one fold reaches a boundary index") {
        const auto chain = maximizer_chain({2, 1}, {3, 0});
        REQUIRE(chain.size() == 1);
        CHECK(chain[0].rot.a == 0);
        CHECK(chain[0].rot.b == 1);
        CHECK(chain[0].landing == MultiIndex{3, 0});
        CHECK(chain[0].coeff != 0.0);
    }
    SUBCASE("already at the target") {
        CHECK(maximizer_chain({4, 0}, {4, 0}).empty());
        CHECK(maximizer_chain({2, 1}, {2, 1}).empty());
    }
    SUBCASE("two phases across three modes") {
        const auto chain = maximizer_chain({1, 0, 1}, {0, 2, 0});
        REQUIRE(chain.size() == 2);
        CHECK(chain[0].rot.b == 2);
        CHECK(chain[0].landing == MultiIndex{2, 0, 0});
        CHECK(chain[1].rot.b == 1);
        CHECK(chain[1].landing == MultiIndex{0, 2, 0});
        for (const auto& step : chain) CHECK(step.coeff != 0.0);
    }
    SUBCASE("degree mismatch is rejected") {
        CHECK_THROWS_AS(maximizer_chain({1, 0}, {2, 0}), std::invalid_argument);
        CHECK_THROWS_AS(maximizer_chain({1, 0}, {1, 0, 0}), std::invalid_argument);
    }
    SUBCASE("random chains land with nonzero coefficients") {
        std::mt19937_64 rng(0xC0FFEE);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 2 + int(rng() % 2);
            const int lam = 1 + int(rng() % 6);
            const auto chain =
                maximizer_chain(random_of_order(rng, n, lam), random_of_order(rng, n, lam));
            for (const auto& step : chain) CHECK(step.coeff != 0.0);
        }
    }
}

TEST_CASE("rotations preserve ball-localization energy") {
    const BallSpec ball2{2, 1.0};
    const auto rep = verify_rotation_invariance({1, 0}, PlaneRotation{0, 1, kQuarterTurn}, ball2);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-12);

    const auto rep11 =
        verify_rotation_invariance({1, 1}, PlaneRotation{0, 1, kQuarterTurn}, BallSpec{2, 1.5});
    CHECK(rep11.pass);

    const auto rep0 = verify_rotation_invariance({0, 0}, PlaneRotation{0, 1, kQuarterTurn}, ball2);
    CHECK(rep0.pass);

    // arbitrary angle through the floating path
    const auto repf = verify_rotation_invariance({2, 1}, PlaneRotation{0, 1, 0.9}, ball2);
    CHECK(repf.residual <= 1e-10);
}

}  // TEST_SUITE
