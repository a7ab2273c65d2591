#pragma once

#include <cstdint>

#include "wigloc/localization.hpp"
#include "wigloc/multi_index.hpp"

namespace wigloc {

// Settings for the independent integration engines.  One documented
// default so CI numbers are reproducible.
struct QuadratureSpec {
    int radial_nodes = 48;
    int angular_nodes = 64;
    long long mc_samples = 1000000;
    std::uint64_t rng_seed = 0x5EED;
};

struct McResult {
    double estimate;
    double std_error;
};

// Monte Carlo integral of the (mu, nu) phase-space kernel over B^{2n}(r):
// uniform ball samples (Gaussian direction, radius law r * U^(1/(2n))),
// mean of the kernel's real part times the ball volume pi^n r^(2n) / n!.
// Sampling is split into fixed shards with seeds derived from rng_seed and
// reduced in shard order, so results are reproducible bit for bit.
McResult mc_ball_integral(const MultiIndex& mu, const MultiIndex& nu, const BallSpec& ball,
                          const QuadratureSpec& spec);

// Diagonal ball integral by nested Gauss-Legendre over the radial simplex
// { u_j >= 0, sum u_j <= r^2 } — the same reduction the exact pipeline
// uses, evaluated numerically instead of symbolically.
double simplex_quad_integral(const MultiIndex& mu, const BallSpec& ball,
                             const QuadratureSpec& spec);

}  // namespace wigloc
