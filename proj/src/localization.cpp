#include "wigloc/localization.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wigloc/quadrature.hpp"
#include "wigloc/special.hpp"
#include "wigloc/wigner.hpp"

namespace wigloc {

CumulativeForm diagonal_form(const MultiIndex& mu) {
    if (mu.empty()) throw std::invalid_argument("diagonal_form: empty multi-index");
    // Per-mode polar reduction sends the 2n-dimensional ball integral to a
    // simplex integral of a product of one-mode radial densities, which is
    // the cumulative of their convolution.
    PolyExp f = radial_integrand(mu[0]);
    for (std::size_t j = 1; j < mu.size(); ++j) f = convolve(f, radial_integrand(mu[j]));
    return integrate(f);
}

BallIntegral ball_integral_diagonal(const MultiIndex& mu, const BallSpec& ball) {
    if (static_cast<int>(mu.size()) != ball.n)
        throw std::invalid_argument("ball_integral_diagonal: dimension mismatch");
    if (ball.r < 0) throw std::domain_error("ball_integral_diagonal: negative radius");
    CumulativeForm form = diagonal_form(mu);
    const double value = form.at(ball.r * ball.r);
    return BallIntegral{std::move(form), value};
}

double ground_state_energy(const BallSpec& ball) {
    if (ball.n < 1) throw std::invalid_argument("ground_state_energy: dimension must be >= 1");
    if (ball.r < 0) throw std::domain_error("ground_state_energy: negative radius");
    return 1.0 - regularized_upper_gamma(ball.n, ball.r * ball.r);
}

namespace {

// Angular average of the one-mode kernel on the circle of squared radius u:
// (1/2) integral_0^{2pi} W_{h_j,h_k}(sqrt u cos t, sqrt u sin t) dt by the
// M-point trapezoid, which is exact here because the integrand is the
// single harmonic e^(-i(j-k)t) times a radial factor.
Complex angular_average(int j, int k, double u, int m_nodes) {
    const double rad = std::sqrt(u);
    Complex acc{0.0, 0.0};
    for (int m = 0; m < m_nodes; ++m) {
        const double t = 2.0 * M_PI * m / m_nodes;
        acc += wigner_pair_1d(j, k, rad * std::cos(t), rad * std::sin(t));
    }
    return acc * (M_PI / m_nodes);
}

Complex offdiag_level(const MultiIndex& mu, const MultiIndex& nu, const GaussLegendre& rule,
                      int angular_nodes, std::size_t level, double budget) {
    if (level == mu.size()) return Complex{1.0, 0.0};
    const double half = 0.5 * budget;
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double u = half * (rule.x[i] + 1.0);
        const Complex a = angular_average(mu[level], nu[level], u, angular_nodes);
        if (a == Complex{0.0, 0.0}) continue;
        acc += rule.w[i] * a * offdiag_level(mu, nu, rule, angular_nodes, level + 1, budget - u);
    }
    return half * acc;
}

}  // namespace

double ball_integral_offdiag(const MultiIndex& mu, const MultiIndex& nu, const BallSpec& ball,
                             int angular_nodes, int radial_nodes) {
    if (static_cast<int>(mu.size()) != ball.n || static_cast<int>(nu.size()) != ball.n)
        throw std::invalid_argument("ball_integral_offdiag: dimension mismatch");
    if (mu == nu)
        throw std::invalid_argument(
            "ball_integral_offdiag: equal indices belong to the exact diagonal path");
    if (angular_nodes < 8 || radial_nodes < 8)
        throw std::invalid_argument("ball_integral_offdiag: node counts must be >= 8");
    if (ball.r <= 0) return 0.0;
    const GaussLegendre& rule = gauss_legendre(radial_nodes);
    return offdiag_level(mu, nu, rule, angular_nodes, 0, ball.r * ball.r).real();
}

double energy_of_state(const HermiteSuperposition& psi, const BallSpec& ball) {
    if (static_cast<int>(psi.dim()) != ball.n)
        throw std::invalid_argument("energy_of_state: dimension mismatch");
    // Cross terms integrate to zero over centered balls, so the energy is
    // carried by the diagonal alone.
    double e = 0.0;
    for (const auto& t : psi.terms())
        e += std::norm(t.coeff) * ball_integral_diagonal(t.mu, ball).value;
    return e;
}

LocalizationCurve localization_curve(const MultiIndex& mu, const std::vector<double>& radii) {
    LocalizationCurve curve;
    curve.mu = mu;
    curve.form = diagonal_form(mu);
    curve.radii = radii;
    curve.values.reserve(radii.size());
    for (double r : radii) {
        if (r < 0) throw std::domain_error("localization_curve: negative radius");
        curve.values.push_back(curve.form.at(r * r));
    }
    return curve;
}

OptimalityReport verify_optimality(int lambda_max, int n, const std::vector<double>& r_grid) {
    if (lambda_max < 1) throw std::invalid_argument("verify_optimality: lambda_max must be >= 1");
    if (n < 1) throw std::invalid_argument("verify_optimality: dimension must be >= 1");
    for (double r : r_grid)
        if (r <= 0)
            throw std::invalid_argument(
                "verify_optimality: grid radii must be positive (equality holds at r = 0)");

    const MultiIndex zero(n, 0);
    const CumulativeForm ground = diagonal_form(zero);

    OptimalityReport report;
    report.min_gap = std::numeric_limits<double>::infinity();
    for (const MultiIndex& mu : multi_indices_up_to(n, lambda_max)) {
        if (order(mu) == 0) continue;
        // gap(r) = ground(r) - I_mu(r) = (q_mu - q_0)(s) e^(-s) at s = r^2:
        // both constants are 1, so the difference polynomial is exact and
        // the evaluation is cancellation-free.
        CumulativeForm form = diagonal_form(mu);
        if (!(form.constant == ground.constant))
            throw std::logic_error("verify_optimality: total masses differ");
        RationalPoly delta = form.tail - ground.tail;
        for (double r : r_grid) {
            const double s = r * r;
            const double gap = delta.at_compensated(s) * std::exp(-s);
            ++report.comparisons;
            if (!(gap > 0.0)) report.all_strict = false;
            if (gap < report.min_gap) {
                report.min_gap = gap;
                report.min_gap_mu = mu;
                report.min_gap_r = r;
            }
        }
    }
    return report;
}

std::optional<NonmonotonicityWitness> nonmonotonicity_witness(int lam, int n,
                                                              const std::vector<double>& r_grid) {
    if (lam < 0 || n < 1) throw std::invalid_argument("nonmonotonicity_witness: bad parameters");
    MultiIndex mu(n, 0);
    mu[0] = lam;
    const CumulativeForm form = diagonal_form(mu);
    double prev_r = -1.0, prev_v = 0.0;
    for (double r : r_grid) {
        const double v = form.at(r * r);
        if (prev_r >= 0 && prev_v > v)
            return NonmonotonicityWitness{prev_r, r, prev_v, v};
        prev_r = r;
        prev_v = v;
    }
    return std::nullopt;
}

namespace {

void check_step_weight(const StepWeight& w) {
    if (w.radii.size() != w.increments.size() || w.radii.empty())
        throw std::invalid_argument("step weight: radii and increments must pair up");
    double prev = 0.0;
    for (std::size_t i = 0; i < w.radii.size(); ++i) {
        if (w.radii[i] <= prev) throw std::invalid_argument("step weight: radii must increase");
        if (w.increments[i] <= 0) throw std::invalid_argument("step weight: increments must be positive");
        prev = w.radii[i];
    }
}

}  // namespace

double weighted_energy(const HermiteSuperposition& psi, const StepWeight& weight) {
    check_step_weight(weight);
    double e = 0.0;
    for (std::size_t i = 0; i < weight.radii.size(); ++i)
        e += weight.increments[i] *
             energy_of_state(psi, BallSpec{static_cast<int>(psi.dim()), weight.radii[i]});
    return e;
}

double weighted_energy_diagonal(const MultiIndex& mu, const StepWeight& weight) {
    check_step_weight(weight);
    const CumulativeForm form = diagonal_form(mu);
    double e = 0.0;
    for (std::size_t i = 0; i < weight.radii.size(); ++i)
        e += weight.increments[i] * form.at(weight.radii[i] * weight.radii[i]);
    return e;
}

}  // namespace wigloc
