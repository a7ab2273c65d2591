#pragma once

#include <optional>
#include <vector>

#include "wigloc/multi_index.hpp"
#include "wigloc/polyexp.hpp"

namespace wigloc {

// Euclidean ball B^{2n}(r) in phase space, centered at the origin.
struct BallSpec {
    int n;
    double r;
};

struct BallIntegral {
    CumulativeForm form;  // exact: value = c - q(r^2) e^(-r^2)
    double value;
};

// Exact (c, q) closed form of r -> integral over B^{2n}(r) of the mu-th
// eigenstate's phase-space density.  Radius-independent object; evaluate
// the form at s = r^2.
CumulativeForm diagonal_form(const MultiIndex& mu);

// Same, bundled with the evaluation at one radius.  Exact pipeline:
// n-fold convolution of the per-mode radial densities, integrated to r^2.
BallIntegral ball_integral_diagonal(const MultiIndex& mu, const BallSpec& ball);

// Closed-form ball integral of the ground state, 1 - Q(n, r^2) with Q the
// regularized upper incomplete gamma.  This is the maximal value over all
// normalized states; ball_integral_diagonal on the zero index must
// reproduce it exactly.
double ground_state_energy(const BallSpec& ball);

// Numerical check that the cross term between two distinct eigenstates
// integrates to zero over every centered ball: per-mode angular trapezoid
// (exact for the single harmonic each mode carries) times nested Gauss
// radial rule over the simplex sum u_j <= r^2.  Returns the real part.
double ball_integral_offdiag(const MultiIndex& mu, const MultiIndex& nu, const BallSpec& ball,
                             int angular_nodes = 64, int radial_nodes = 48);

// Ball-localization energy of a superposition: cross terms drop (they
// integrate to zero), leaving sum of |c_mu|^2 times diagonal integrals.
double energy_of_state(const HermiteSuperposition& psi, const BallSpec& ball);

// Exact curve samples for one index over a radius grid.
struct LocalizationCurve {
    MultiIndex mu;
    CumulativeForm form;
    std::vector<double> radii;
    std::vector<double> values;
};

LocalizationCurve localization_curve(const MultiIndex& mu, const std::vector<double>& radii);

// Checks ball_integral_diagonal(mu) < ground_state_energy strictly for
// every 1 <= |mu| <= lambda_max and every grid radius (> 0).
struct OptimalityReport {
    bool all_strict = true;
    double min_gap = 0.0;
    MultiIndex min_gap_mu;
    double min_gap_r = 0.0;
    long long comparisons = 0;
};

OptimalityReport verify_optimality(int lambda_max, int n, const std::vector<double>& r_grid);

// First inversion of a diagonal curve on the grid: radii r1 < r2 with
// curve(r1) > curve(r2), if any.
struct NonmonotonicityWitness {
    double r1, r2;
    double v1, v2;
};

std::optional<NonmonotonicityWitness> nonmonotonicity_witness(int lam, int n,
                                                              const std::vector<double>& r_grid);

// Symmetric decreasing step function w(rho) = sum_i increments[i] * [rho <= radii[i]].
struct StepWeight {
    std::vector<double> radii;       // strictly increasing, positive
    std::vector<double> increments;  // positive
};

// integral of w(|(x,y)|) times the state's phase-space density: by the
// layer-cake identity, a positive combination of ball energies.
double weighted_energy(const HermiteSuperposition& psi, const StepWeight& weight);
double weighted_energy_diagonal(const MultiIndex& mu, const StepWeight& weight);

}  // namespace wigloc
