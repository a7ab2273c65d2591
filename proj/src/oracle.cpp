#include "wigloc/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "wigloc/quadrature.hpp"
#include "wigloc/wigner.hpp"

namespace wigloc {

namespace {

constexpr int kShards = 16;

// splitmix64 step; decorrelates per-shard seeds derived from the root seed.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double ball_volume(int n, double r) {
    // |B^{2n}(r)| = pi^n r^{2n} / n!
    double v = 1.0;
    for (int k = 1; k <= n; ++k) v *= M_PI * r * r / k;
    return v;
}

}  // namespace

McResult mc_ball_integral(const MultiIndex& mu, const MultiIndex& nu, const BallSpec& ball,
                          const QuadratureSpec& spec) {
    if (static_cast<int>(mu.size()) != ball.n || static_cast<int>(nu.size()) != ball.n)
        throw std::invalid_argument("mc_ball_integral: dimension mismatch");
    if (spec.mc_samples < 10000)
        throw std::invalid_argument("mc_ball_integral: need at least 1e4 samples");
    if (ball.r == 0.0) return McResult{0.0, 0.0};
    if (ball.r < 0) throw std::domain_error("mc_ball_integral: negative radius");

    const int n = ball.n;
    const int d = 2 * n;
    const double volume = ball_volume(n, ball.r);

    // Fixed shard layout with seeds derived from the root seed; shards are
    // reduced in index order, so the result does not depend on how the work
    // is scheduled.
    double sum = 0.0, sumsq = 0.0;
    long long done = 0;
    for (int shard = 0; shard < kShards; ++shard) {
        long long quota = spec.mc_samples / kShards;
        if (shard < spec.mc_samples % kShards) ++quota;
        std::mt19937_64 rng(mix(spec.rng_seed + shard));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double s = 0.0, s2 = 0.0;
        PhasePoint p;
        p.x.resize(n);
        p.y.resize(n);
        std::vector<double> g(d);
        for (long long i = 0; i < quota; ++i) {
            // Uniform in the ball: Gaussian direction, radius r * U^(1/d).
            double norm2 = 0.0;
            for (int a = 0; a < d; ++a) {
                g[a] = gauss(rng);
                norm2 += g[a] * g[a];
            }
            const double radius = ball.r * std::pow(unif(rng), 1.0 / d);
            const double scale = radius / std::sqrt(norm2);
            for (int a = 0; a < n; ++a) {
                p.x[a] = scale * g[a];
                p.y[a] = scale * g[n + a];
            }
            const double w = wigner_pair(mu, nu, p).real();
            s += w;
            s2 += w * w;
        }
        sum += s;
        sumsq += s2;
        done += quota;
    }

    const double mean = sum / done;
    const double var = (sumsq - done * mean * mean) / (done - 1);
    return McResult{volume * mean, volume * std::sqrt(var / done)};
}

double simplex_quad_integral(const MultiIndex& mu, const BallSpec& ball,
                             const QuadratureSpec& spec) {
    if (static_cast<int>(mu.size()) != ball.n)
        throw std::invalid_argument("simplex_quad_integral: dimension mismatch");
    if (spec.radial_nodes < 8)
        throw std::invalid_argument("simplex_quad_integral: need at least 8 radial nodes");
    if (ball.r == 0.0) return 0.0;
    if (ball.r < 0) throw std::domain_error("simplex_quad_integral: negative radius");

    // Per-mode radial densities as plain double coefficient rows; the leaf
    // count is radial_nodes^n, so keep the evaluation there cheap.
    std::vector<std::vector<double>> rows;
    rows.reserve(mu.size());
    for (int k : mu) {
        const RationalPoly poly = radial_integrand(k).poly;
        std::vector<double> row;
        row.reserve(poly.coeffs().size());
        for (const auto& c : poly.coeffs()) row.push_back(to_double(c));
        rows.push_back(std::move(row));
    }

    auto integrand = [&rows](const std::vector<double>& u) {
        double prod = 1.0;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            double acc = 0.0;
            for (auto it = rows[j].rbegin(); it != rows[j].rend(); ++it) acc = acc * u[j] + *it;
            prod *= acc * std::exp(-u[j]);
        }
        return prod;
    };
    return simplex_integral(ball.n, ball.r * ball.r, spec.radial_nodes, integrand);
}

}  // namespace wigloc
