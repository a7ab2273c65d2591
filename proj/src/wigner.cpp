#include "wigloc/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "wigloc/quadrature.hpp"
#include "wigloc/special.hpp"

namespace wigloc {

namespace {

constexpr int kMaxIndex = 200;
const double kSqrt2 = 1.4142135623730950488;

}  // namespace

Complex wigner_pair_1d(int j, int k, double x, double y) {
    if (j < 0 || k < 0 || j > kMaxIndex || k > kMaxIndex)
        throw std::out_of_range("wigner_pair_1d: index outside [0, 200]");
    if (j < k) return std::conj(wigner_pair_1d(k, j, x, y));

    const double r2 = x * x + y * y;
    // sqrt(k!/j!) accumulated factor by factor; the ratio itself would
    // underflow long before the product of the remaining terms matters.
    double scale = 1.0;
    for (int t = k + 1; t <= j; ++t) scale /= std::sqrt(double(t));
    // (sqrt2 conj z)^(j-k) by repeated multiplication: the exponent is an
    // integer, so no branch cuts to worry about.
    Complex pw{1.0, 0.0};
    const Complex base{kSqrt2 * x, -kSqrt2 * y};
    for (int t = 0; t < j - k; ++t) pw *= base;

    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double radial = sign * M_1_PI * scale * std::exp(-r2) * laguerre(k, j - k, 2.0 * r2);
    return radial * pw;
}

Complex wigner_pair(const MultiIndex& mu, const MultiIndex& nu, const PhasePoint& p) {
    if (mu.size() != nu.size() || mu.size() != p.dim())
        throw std::invalid_argument("wigner_pair: dimension mismatch");
    Complex prod{1.0, 0.0};
    for (std::size_t i = 0; i < mu.size(); ++i)
        prod *= wigner_pair_1d(mu[i], nu[i], p.x[i], p.y[i]);
    return prod;
}

double wigner_state(const HermiteSuperposition& psi, const PhasePoint& p) {
    if (psi.dim() != p.dim()) throw std::invalid_argument("wigner_state: dimension mismatch");
    Complex acc{0.0, 0.0};
    for (const auto& s : psi.terms())
        for (const auto& t : psi.terms())
            acc += s.coeff * std::conj(t.coeff) * wigner_pair(s.mu, t.mu, p);
    // The double sum is Hermitian, so anything imaginary is an assembly bug,
    // not noise to be discarded silently.
    if (std::abs(acc.imag()) > 1e-10)
        throw std::runtime_error("wigner_state: imaginary residual above tolerance");
    return acc.real();
}

WaveFunction wave_function(const HermiteSuperposition& psi) {
    return [psi](const std::vector<double>& x) {
        Complex acc{0.0, 0.0};
        for (const auto& t : psi.terms()) acc += t.coeff * hermite_product(t.mu, x);
        return acc;
    };
}

namespace {

// Recursive tensor quadrature over tau; accumulates the product of the
// per-axis weights and the phase tau.y, calling psi twice per grid point.
Complex wigner_numeric_level(const WaveFunction& psi, const PhasePoint& p,
                             const GaussLegendre& rule, double half_width, std::size_t level,
                             std::vector<double>& tau) {
    const std::size_t n = p.dim();
    if (level == n) {
        std::vector<double> plus(n), minus(n);
        double phase = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            plus[i] = p.x[i] + 0.5 * tau[i];
            minus[i] = p.x[i] - 0.5 * tau[i];
            phase += tau[i] * p.y[i];
        }
        return psi(plus) * std::conj(psi(minus)) * Complex{std::cos(phase), -std::sin(phase)};
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        tau[level] = half_width * rule.x[i];
        acc += rule.w[i] * wigner_numeric_level(psi, p, rule, half_width, level + 1, tau);
    }
    return half_width * acc;
}

}  // namespace

double wigner_numeric(const WaveFunction& psi, const PhasePoint& p, double half_width, int nodes) {
    if (nodes < 32) throw std::invalid_argument("wigner_numeric: need at least 32 nodes per axis");
    if (half_width <= 0) throw std::invalid_argument("wigner_numeric: half_width must be positive");
    const std::size_t n = p.dim();
    std::vector<double> tau(n, 0.0);
    Complex integral = wigner_numeric_level(psi, p, gauss_legendre(nodes), half_width, 0, tau);
    return integral.real() * std::pow(2.0 * M_PI, -double(n));
}

double wigner_sup_bound(int n) {
    if (n < 1) throw std::invalid_argument("wigner_sup_bound: dimension must be >= 1");
    return std::pow(M_PI, -double(n));
}

}  // namespace wigloc
