#pragma once

#include <vector>

#include "wigloc/rational.hpp"

namespace wigloc {

// Dense univariate polynomial with exact rational coefficients.
// coeffs[k] multiplies u^k; the highest stored coefficient is nonzero
// unless the polynomial is identically zero (empty vector).
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly zero() { return RationalPoly{}; }
    static RationalPoly constant(Rational c);
    static RationalPoly monomial(int degree, Rational c);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational constant_term() const { return coeff(0); }

    Rational at(const Rational& u) const;
    double at(double u) const;
    // Horner with error-free transformations; limits error growth when
    // coefficients alternate in sign.
    double at_compensated(double u) const;

    RationalPoly derivative() const;

    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& s);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
    RationalPoly operator*(const RationalPoly& rhs) const;
    bool operator==(const RationalPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

// The function u -> poly(u) * e^(-u) on [0, inf). Closed under sum,
// scalar multiple, product and half-line convolution.
struct PolyExp {
    RationalPoly poly;

    double at(double u) const;
    bool operator==(const PolyExp& rhs) const { return poly == rhs.poly; }
};

// Generalized Laguerre polynomial L_j^alpha as exact coefficients, by the
// three-term recurrence; degree exactly j.
RationalPoly laguerre_exact(int j, int alpha);

// u -> (-1)^k L_k(2u) e^(-u): the per-mode radial density of the k-th
// oscillator eigenstate's phase-space distribution after u = x^2 + y^2.
PolyExp radial_integrand(int k);

// s -> integral_0^s f(t) g(s-t) dt.  Monomial rule:
// (u^a e^-u) * (u^b e^-u) = a! b! / (a+b+1)! s^(a+b+1) e^-s, bilinear.
PolyExp convolve(const PolyExp& f, const PolyExp& g);

// Antiderivative of a PolyExp vanishing at 0, in the closed form
// s -> constant - tail(s) e^(-s) with constant = tail(0).
struct CumulativeForm {
    Rational constant;
    RationalPoly tail;

    double at(double s) const;
    bool operator==(const CumulativeForm& rhs) const = default;
};

CumulativeForm integrate(const PolyExp& f);

struct IntegralValue {
    CumulativeForm form;
    double value;
};

// integral_0^s f, both as the exact closed form and evaluated at s.
IntegralValue integrate_to(const PolyExp& f, double s);

}  // namespace wigloc
