#include <doctest.h>

#include <cmath>
#include <random>

#include "wigloc/localization.hpp"
#include "wigloc/oracle.hpp"

using namespace wigloc;

TEST_SUITE("oracle") {

TEST_CASE("monte carlo reproduces the ground-state mass") {
    QuadratureSpec spec;
    spec.mc_samples = 400000;
    spec.rng_seed = 17;
    const McResult mc = mc_ball_integral({0}, {0}, BallSpec{1, 1.0}, spec);
    const double exact = 1.0 - std::exp(-1.0);
    CHECK(mc.std_error > 0.0);
    CHECK(mc.std_error < 0.01);
    CHECK(std::abs(mc.estimate - exact) <= 3.0 * mc.std_error);
}

TEST_CASE("monte carlo sees cross terms vanish") {
    QuadratureSpec spec;
    spec.mc_samples = 400000;
    spec.rng_seed = 99;
    const McResult mc = mc_ball_integral({1}, {0}, BallSpec{1, 1.0}, spec);
    CHECK(std::abs(mc.estimate) <= 3.0 * mc.std_error);
}

TEST_CASE("degenerate ball") {
    QuadratureSpec spec;
    spec.mc_samples = 10000;
    const McResult mc = mc_ball_integral({0}, {0}, BallSpec{1, 0.0}, spec);
    CHECK(mc.estimate == 0.0);
    CHECK(mc.std_error == 0.0);
    spec.mc_samples = 100;
    CHECK_THROWS_AS(mc_ball_integral({0}, {0}, BallSpec{1, 1.0}, spec), std::invalid_argument);
}

TEST_CASE("estimates are reproducible for a fixed seed") {
    QuadratureSpec spec;
    spec.mc_samples = 50000;
    spec.rng_seed = 0xFEEDFACE;
    const McResult a = mc_ball_integral({2, 0}, {0, 2}, BallSpec{2, 1.3}, spec);
    const McResult b = mc_ball_integral({2, 0}, {0, 2}, BallSpec{2, 1.3}, spec);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    spec.rng_seed += 1;
    const McResult c = mc_ball_integral({2, 0}, {0, 2}, BallSpec{2, 1.3}, spec);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("simplex quadrature hits the closed forms") {
    QuadratureSpec spec;
    CHECK(simplex_quad_integral({0}, BallSpec{1, 1.0}, spec) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));

    const BallSpec ball{2, 1.5};
    const double exact = ball_integral_diagonal({1, 1}, ball).value;
    CHECK(simplex_quad_integral({1, 1}, ball, spec) ==
          doctest::Approx(exact).epsilon(1e-10));

    const BallSpec ball3{3, 2.0};
    CHECK(simplex_quad_integral({0, 0, 0}, ball3, spec) ==
          doctest::Approx(ground_state_energy(ball3)).epsilon(1e-10));
}

TEST_CASE("simplex quadrature is converged at the default node count") {
    QuadratureSpec coarse;
    QuadratureSpec fine;
    fine.radial_nodes = 2 * coarse.radial_nodes;
    const BallSpec ball{2, 1.8};
    const double a = simplex_quad_integral({3, 1}, ball, coarse);
    const double b = simplex_quad_integral({3, 1}, ball, fine);
    CHECK(std::abs(a - b) < 1e-11);
}

TEST_CASE("three routes to the same diagonal integral") {
    std::mt19937_64 rng(0xB0A2);
    std::uniform_real_distribution<double> radius(0.4, 2.2);
    QuadratureSpec spec;
    spec.mc_samples = 120000;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + int(rng() % 2);
        const int lam = int(rng() % 5);
        const auto space = multi_indices_of_order(n, lam);
        const MultiIndex mu = space[rng() % space.size()];
        const BallSpec ball{n, radius(rng)};
        spec.rng_seed = 0x5EED + trial;

        const double exact = ball_integral_diagonal(mu, ball).value;
        const double quad = simplex_quad_integral(mu, ball, spec);
        const McResult mc = mc_ball_integral(mu, mu, ball, spec);

        CHECK(std::abs(quad - exact) <= 1e-10);
        CHECK(std::abs(mc.estimate - exact) <= 3.5 * mc.std_error);
    }
}

}  // TEST_SUITE
