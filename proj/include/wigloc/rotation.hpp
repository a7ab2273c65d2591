#pragma once

#include <map>
#include <vector>

#include "wigloc/localization.hpp"
#include "wigloc/multi_index.hpp"
#include "wigloc/rational.hpp"

namespace wigloc {

// Element a + b*sqrt(2) of the quadratic field Q(sqrt 2).  Closed under the
// quarter-turn substitutions, which keeps the whole eigenspace-rotation
// pipeline exact.
struct QSqrt2 {
    Rational a;
    Rational b;

    QSqrt2() : a(0), b(0) {}
    QSqrt2(Rational ra) : a(std::move(ra)), b(0) {}
    QSqrt2(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static QSqrt2 sqrt2() { return QSqrt2{0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QSqrt2& operator+=(const QSqrt2& r) { a += r.a; b += r.b; return *this; }
    QSqrt2& operator-=(const QSqrt2& r) { a -= r.a; b -= r.b; return *this; }
    QSqrt2 operator-() const { return QSqrt2{-a, -b}; }
    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2{x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    QSqrt2& operator*=(const QSqrt2& r) { return *this = *this * r; }
    bool operator==(const QSqrt2& r) const { return a == r.a && b == r.b; }

    double to_double() const { return wigloc::to_double(a) + wigloc::to_double(b) * 1.4142135623730950488; }
};

// Plane rotation acting on coordinates (a, b), 0 <= a < b < n.  The
// quarter-turn angle pi/4 is the exact-arithmetic path; other angles run
// through the floating-point fallback.
struct PlaneRotation {
    int a;
    int b;
    double theta;
};

constexpr double kQuarterTurn = 0.78539816339744830961;  // pi/4

// P(x) e^(-|x|^2/2) with P recorded exactly: an integer-scaled coefficient
// table (exponent multi-index -> Q(sqrt2) element) plus the squared norm of
// the table's polynomial under the Gaussian weight, kept separately as a
// rational.  The represented L^2 function is
//     pi^(-n/4) P(x) e^(-|x|^2/2) / sqrt(norm_sq).
// Keeping the normalizer out of the table is what preserves exactness:
// normalized coefficients would drag in sqrt(k!) factors outside Q(sqrt2).
struct GaussHermitePoly {
    int n = 0;
    int lambda = 0;  // total degree of P = eigenvalue of the represented state
    Rational norm_sq = 1;
    std::map<MultiIndex, QSqrt2> coeffs;
};

// Exact polynomial form of the mu-th eigenstate.  Table carries the
// physicists' Hermite product (integer coefficients); norm_sq = 2^|mu| mu!.
GaussHermitePoly hermite_to_poly(const MultiIndex& mu);

// Quarter-turn substitution x_a <- (x_a + x_b)/sqrt2, x_b <- (x_a - x_b)/sqrt2
// (an orthogonal map; the Gaussian factor is invariant).  Exact.
// pre: rot.theta == kQuarterTurn.
GaussHermitePoly apply_rotation(const GaussHermitePoly& f, const PlaneRotation& rot);

// One term of the eigenbasis expansion of a rotated state.  The signed
// coefficient c itself involves sqrt(nu!/mu!) and is reported in floating
// point; its square stays exact.
struct ExpansionTerm {
    MultiIndex nu;
    QSqrt2 d;       // weight of the nu-th Hermite-product polynomial inside P
    QSqrt2 amp_sq;  // |c_nu|^2, exact
    double c;       // signed coefficient, floating
};

struct HermiteExpansion {
    int lambda = 0;
    std::vector<ExpansionTerm> terms;

    QSqrt2 amp_sq_total() const;  // must be exactly 1 for a unit vector
    const ExpansionTerm* find(const MultiIndex& nu) const;
};

// Re-expands P in the degree-lambda eigenbasis by triangular elimination
// from the top-degree monomials down (each basis polynomial is
// 2^lambda x^nu plus lower order, so d_nu reads off the x^nu coefficient).
// The eliminated remainder must vanish identically; anything else means
// the input left the eigenspace and is reported as an error.
HermiteExpansion poly_to_hermite(const GaussHermitePoly& f);

// Floating-point fallback for arbitrary angles.
struct NumericPoly {
    int n = 0;
    int lambda = 0;
    double norm_sq = 1.0;
    std::map<MultiIndex, double> coeffs;
};

NumericPoly to_numeric(const GaussHermitePoly& f);
NumericPoly apply_rotation_numeric(const NumericPoly& f, const PlaneRotation& rot);
// Coefficients c_nu over the |nu| = lambda eigenspace, same elimination in
// floating point (no residual guarantee; returns the residual sup norm).
struct NumericExpansion {
    std::vector<std::pair<MultiIndex, double>> terms;
    double residual = 0.0;
};
NumericExpansion poly_to_hermite_numeric(const NumericPoly& f);

// One link of the two-phase chain connecting eigenstates of equal
// eigenvalue through quarter-turn rotations.
struct ChainStep {
    PlaneRotation rot;
    MultiIndex landing;  // index the chain continues from
    double coeff;        // its (nonzero) expansion coefficient
};

// Phase one folds every excited coordinate of `start` into coordinate 0;
// phase two deals coordinate 0 back out to `target`.  No-op links are
// skipped; every emitted link's landing coefficient is verified nonzero
// through the exact expansion.
std::vector<ChainStep> maximizer_chain(const MultiIndex& start, const MultiIndex& target);

// Checks sum_nu |c_nu|^2 I_nu(r) = I_mu(r): rotating a state does not move
// its ball-localization energy.  Both sides from exact closed forms.
struct InvarianceReport {
    bool pass = false;
    double rotated = 0.0;
    double direct = 0.0;
    double residual = 0.0;
};

InvarianceReport verify_rotation_invariance(const MultiIndex& mu, const PlaneRotation& rot,
                                            const BallSpec& ball);

}  // namespace wigloc
