#include <doctest.h>

#include <cmath>
#include <random>

#include "wigloc/polyexp.hpp"
#include "wigloc/quadrature.hpp"

using namespace wigloc;

namespace {

RationalPoly poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return RationalPoly{std::move(v)};
}

PolyExp random_polyexp(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = Rational(num(rng), den(rng));
    return PolyExp{RationalPoly{std::move(cs)}};
}

// integral_0^s f(t) g(s-t) dt by Gauss-Legendre, as an independent check
// on the closed-form convolution.
double numeric_convolution(const PolyExp& f, const PolyExp& g, double s) {
    const auto& rule = gauss_legendre(64);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double t = 0.5 * s * (rule.x[i] + 1.0);
        acc += rule.w[i] * f.at(t) * g.at(s - t);
    }
    return 0.5 * s * acc;
}

}  // namespace

TEST_SUITE("polyexp") {

TEST_CASE("rational poly basics") {
    RationalPoly p = poly({1, 0, -3});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(2) == -3);
    CHECK(p.coeff(5) == 0);
    CHECK(p.at(Rational(2)) == Rational(-11));
    CHECK(p.at(2.0) == doctest::Approx(-11.0).epsilon(1e-15));

    SUBCASE("trailing zeros are trimmed") {
        RationalPoly q = poly({1, 2, 0, 0});
        CHECK(q.degree() == 1);
        CHECK(q == poly({1, 2}));
    }
    SUBCASE("zero polynomial") {
        CHECK(RationalPoly::zero().is_zero());
        CHECK((p - p).is_zero());
        CHECK((p * Rational(0)).is_zero());
        CHECK(RationalPoly::zero().degree() == -1);
    }
    SUBCASE("derivative") {
        CHECK(p.derivative() == poly({0, -6}));
        CHECK(RationalPoly::constant(7).derivative().is_zero());
    }
    SUBCASE("product") {
        CHECK(poly({1, 1}) * poly({-1, 1}) == poly({-1, 0, 1}));
    }
}

TEST_CASE("compensated evaluation agrees with exact rational evaluation") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        PolyExp f = random_polyexp(rng, 8);
        for (double u : {0.0, 0.3, 1.0, 4.5, 9.0}) {
            const Rational exact = f.poly.at(Rational(u));
            CHECK(f.poly.at_compensated(u) ==
                  doctest::Approx(to_double(exact)).epsilon(1e-14));
        }
    }
}

TEST_CASE("exact Laguerre coefficients") {
    CHECK(laguerre_exact(0, 0) == poly({1}));
    CHECK(laguerre_exact(1, 0) == poly({1, -1}));
    CHECK(laguerre_exact(2, 0) == RationalPoly{{Rational(1), Rational(-2), Rational(1, 2)}});
    CHECK(laguerre_exact(1, 3) == poly({4, -1}));
    // degree is exactly j
    for (int j = 0; j <= 12; ++j) CHECK(laguerre_exact(j, 2).degree() == j);
}

TEST_CASE("radial densities") {
    CHECK(radial_integrand(0).poly == poly({1}));
    CHECK(radial_integrand(1).poly == poly({-1, 2}));
    CHECK(radial_integrand(2).poly == poly({1, -4, 2}));
    // value at 0 is always (-1)^k L_k(0) = (-1)^k
    for (int k = 0; k <= 8; ++k)
        CHECK(radial_integrand(k).poly.constant_term() == Rational(k % 2 == 0 ? 1 : -1));
}

TEST_CASE("convolution monomial rule") {
    const PolyExp one{poly({1})};
    const PolyExp u{poly({0, 1})};
    CHECK(convolve(one, one).poly == poly({0, 1}));
    CHECK(convolve(one, u).poly == RationalPoly{{Rational(0), Rational(0), Rational(1, 2)}});
    CHECK(convolve(u, u).poly ==
          RationalPoly{{Rational(0), Rational(0), Rational(0), Rational(1, 6)}});
}

TEST_CASE("convolution degree bookkeeping") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        PolyExp f = random_polyexp(rng, 6);
        PolyExp g = random_polyexp(rng, 6);
        if (f.poly.is_zero() || g.poly.is_zero()) continue;
        CHECK(convolve(f, g).poly.degree() == f.poly.degree() + g.poly.degree() + 1);
    }
}

TEST_CASE("convolution is commutative and associative") {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 20; ++trial) {
        PolyExp f = random_polyexp(rng, 6);
        PolyExp g = random_polyexp(rng, 6);
        PolyExp h = random_polyexp(rng, 6);
        CHECK(convolve(f, g) == convolve(g, f));
        CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
    }
}

TEST_CASE("closed-form convolution matches numerical convolution") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 5; ++trial) {
        PolyExp f = random_polyexp(rng, 5);
        PolyExp g = random_polyexp(rng, 5);
        PolyExp c = convolve(f, g);
        for (int i = 1; i <= 20; ++i) {
            const double s = 0.4 * i;
            const double reference = numeric_convolution(f, g, s);
            const double got = c.at(s);
            CHECK(got == doctest::Approx(reference).epsilon(1e-10));
        }
    }
}

TEST_CASE("cumulative closed forms") {
    SUBCASE("plain exponential") {
        CumulativeForm F = integrate(PolyExp{poly({1})});
        CHECK(F.constant == 1);
        CHECK(F.tail == poly({1}));
        CHECK(F.at(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    }
    SUBCASE("first excited radial density") {
        CumulativeForm F = integrate(radial_integrand(1));
        CHECK(F.constant == 1);
        CHECK(F.tail == poly({1, 2}));  // 1 - (2s+1) e^(-s)
    }
    SUBCASE("u e^(-u)") {
        CumulativeForm F = integrate(PolyExp{poly({0, 1})});
        CHECK(F.constant == 1);
        CHECK(F.tail == poly({1, 1}));  // 1 - (s+1) e^(-s)
    }
    SUBCASE("cumulative vanishes at zero") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            CumulativeForm F = integrate(random_polyexp(rng, 7));
            CHECK(F.at(0.0) == doctest::Approx(0.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("integrate_to returns form and value together") {
    auto [form, value] = integrate_to(radial_integrand(1), 1.0);
    CHECK(value == doctest::Approx(1.0 - 3.0 * std::exp(-1.0)).epsilon(1e-15));
    CHECK(form.constant == 1);
    CHECK_THROWS_AS(integrate_to(radial_integrand(0), -0.5), std::domain_error);
}

TEST_CASE("every radial density has unit total mass") {
    // integral_0^inf (-1)^k L_k(2u) e^(-u) du = 1 for every k: the constant
    // of the cumulative form is the full-line value.  (This is forced by
    // normalization: each eigenstate's distribution integrates to 1.)
    for (int k = 0; k <= 10; ++k) {
        CumulativeForm F = integrate(radial_integrand(k));
        CHECK(F.constant == 1);
    }
}

TEST_CASE("cumulative of an n-fold exponential convolution is the finite gamma sum") {
    // conv^n of e^(-u) = u^(n-1)/(n-1)! e^(-u); its cumulative must be
    // 1 - e^(-s) sum_{k<n} s^k/k! exactly.
    PolyExp f{poly({1})};
    for (int n = 1; n <= 6; ++n) {
        CumulativeForm F = integrate(f);
        CHECK(F.constant == 1);
        std::vector<Rational> expect(n);
        for (int k = 0; k < n; ++k) expect[k] = Rational(1, factorial(k));
        CHECK(F.tail == RationalPoly{std::move(expect)});
        f = convolve(f, PolyExp{poly({1})});
    }
}

}  // TEST_SUITE
