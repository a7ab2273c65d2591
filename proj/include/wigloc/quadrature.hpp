#pragma once

#include <vector>

namespace wigloc {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

// Cached; nodes by Newton iteration on P_n.
const GaussLegendre& gauss_legendre(int n);

namespace detail {

template <class F>
double simplex_integral_level(const GaussLegendre& rule, int level, int n, double budget,
                              std::vector<double>& u, F& f) {
    if (level == n) return f(u);
    // u_level from 0 to whatever of the total budget is left.
    const double half = 0.5 * budget;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        u[level] = half * (rule.x[i] + 1.0);
        acc += rule.w[i] * simplex_integral_level(rule, level + 1, n, budget - u[level], u, f);
    }
    return half * acc;
}

}  // namespace detail

// integral of f over the corner simplex { u_j >= 0, sum u_j <= s } in R^n,
// by nested Gauss-Legendre with `nodes` points per level.  Exact only in the
// limit; fine for smooth integrands at moderate n.
template <class F>
double simplex_integral(int n, double s, int nodes, F&& f) {
    const GaussLegendre& rule = gauss_legendre(nodes);
    std::vector<double> u(n, 0.0);
    return detail::simplex_integral_level(rule, 0, n, s, u, f);
}

}  // namespace wigloc
