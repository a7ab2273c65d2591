#include "wigloc/polyexp.hpp"

#include <cmath>
#include <stdexcept>

namespace wigloc {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RationalPoly RationalPoly::constant(Rational c) {
    return RationalPoly{{std::move(c)}};
}

RationalPoly RationalPoly::monomial(int degree, Rational c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = std::move(c);
    return RationalPoly{std::move(v)};
}

Rational RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::at(const Rational& u) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double RationalPoly::at(double u) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + to_double(*it);
    return acc;
}

double RationalPoly::at_compensated(double u) const {
    // Horner plus a running first-order error term: each product and sum
    // contributes its exact rounding error via fma / Knuth two-sum.
    double acc = 0.0;
    double err = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const double c = to_double(*it);
        const double p = acc * u;
        const double e_mul = std::fma(acc, u, -p);
        const double s = p + c;
        const double t = s - p;
        const double e_add = (p - (s - t)) + (c - t);
        acc = s;
        err = err * u + (e_mul + e_add);
    }
    return acc + err;
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return RationalPoly{};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(k);
    return RationalPoly{std::move(d)};
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RationalPoly RationalPoly::operator*(const RationalPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return RationalPoly{};
    std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RationalPoly{std::move(prod)};
}

double PolyExp::at(double u) const {
    return poly.at_compensated(u) * std::exp(-u);
}

RationalPoly laguerre_exact(int j, int alpha) {
    if (j < 0 || alpha < 0) throw std::invalid_argument("laguerre_exact: negative parameter");
    RationalPoly prev = RationalPoly::constant(1);  // L_0
    if (j == 0) return prev;
    // L_1^a = 1 + a - u
    RationalPoly cur{{Rational(1 + alpha), Rational(-1)}};
    for (int m = 1; m < j; ++m) {
        // (m+1) L_{m+1} = (2m+1+a - u) L_m - (m+a) L_{m-1}
        RationalPoly next = cur * Rational(2 * m + 1 + alpha) -
                            RationalPoly::monomial(1, 1) * cur - prev * Rational(m + alpha);
        next *= Rational(1, m + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

PolyExp radial_integrand(int k) {
    // (-1)^k L_k(2u) e^(-u)
    RationalPoly lk = laguerre_exact(k, 0);
    std::vector<Rational> scaled(lk.coeffs().size());
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    Rational p2 = 1;  // 2^m from the argument substitution
    for (std::size_t m = 0; m < scaled.size(); ++m) {
        scaled[m] = lk.coeffs()[m] * sign * p2;
        p2 *= 2;
    }
    return PolyExp{RationalPoly{std::move(scaled)}};
}

PolyExp convolve(const PolyExp& f, const PolyExp& g) {
    // (u^a e^-u) * (u^b e^-u) = a! b!/(a+b+1)! s^(a+b+1) e^-s
    const auto& fc = f.poly.coeffs();
    const auto& gc = g.poly.coeffs();
    if (fc.empty() || gc.empty()) return PolyExp{};
    std::vector<Rational> out(fc.size() + gc.size(), Rational(0));
    for (std::size_t a = 0; a < fc.size(); ++a) {
        if (fc[a] == 0) continue;
        for (std::size_t b = 0; b < gc.size(); ++b) {
            if (gc[b] == 0) continue;
            Rational w{factorial(a) * factorial(b), factorial(a + b + 1)};
            out[a + b + 1] += fc[a] * gc[b] * w;
        }
    }
    return PolyExp{RationalPoly{std::move(out)}};
}

double CumulativeForm::at(double s) const {
    return to_double(constant) - tail.at_compensated(s) * std::exp(-s);
}

CumulativeForm integrate(const PolyExp& f) {
    // With F(s) = q(s) e^(-s) and q = sum of all derivatives of p,
    // F' = (q' - q) e^(-s) = -p e^(-s); the cumulative is q(0) - q(s) e^(-s).
    RationalPoly q = f.poly;
    RationalPoly d = f.poly.derivative();
    while (!d.is_zero()) {
        q += d;
        d = d.derivative();
    }
    return CumulativeForm{q.constant_term(), std::move(q)};
}

IntegralValue integrate_to(const PolyExp& f, double s) {
    if (s < 0) throw std::domain_error("integrate_to: negative upper limit");
    CumulativeForm form = integrate(f);
    double value = form.at(s);
    return IntegralValue{std::move(form), value};
}

}  // namespace wigloc
