#pragma once

#include <vector>

#include "wigloc/multi_index.hpp"

namespace wigloc {

// L^2-normalized oscillator eigenfunction h_k(x), evaluated by the stable
// function-level recurrence (no raw Hermite polynomial / factorial blowup).
double hermite_function(int k, double x);

// h_0(x), ..., h_kmax(x) in one sweep.
std::vector<double> hermite_function_row(int kmax, double x);

// Product over coordinates: H_mu(x) = prod_j h_{mu_j}(x_j).
double hermite_product(const MultiIndex& mu, const std::vector<double>& x);

// Generalized Laguerre L_j^alpha(x) by the three-term recurrence (double).
double laguerre(int j, int alpha, double x);

// Regularized upper incomplete gamma Q(n, x) = Gamma(n, x) / (n-1)! for
// integer n >= 1: equals e^(-x) sum_{k<n} x^k / k!.
double regularized_upper_gamma(int n, double x);

}  // namespace wigloc
