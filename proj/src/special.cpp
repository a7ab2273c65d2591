#include "wigloc/special.hpp"

#include <cmath>
#include <stdexcept>

namespace wigloc {

namespace {

constexpr int kMaxIndex = 200;
const double kQuarterRootPi = 0.7511255444649424828587030047762276930510;  // pi^(-1/4)

}  // namespace

double hermite_function(int k, double x) {
    if (k < 0 || k > kMaxIndex) throw std::out_of_range("hermite_function: index outside [0, 200]");
    // Recurrence on the normalized functions themselves; the Gaussian is in
    // the seed, so no intermediate grows like a raw Hermite polynomial.
    double prev = 0.0;
    double cur = kQuarterRootPi * std::exp(-0.5 * x * x);
    for (int m = 0; m < k; ++m) {
        double next = x * std::sqrt(2.0 / (m + 1)) * cur - std::sqrt(double(m) / (m + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> hermite_function_row(int kmax, double x) {
    if (kmax < 0 || kmax > kMaxIndex)
        throw std::out_of_range("hermite_function_row: index outside [0, 200]");
    std::vector<double> row(kmax + 1);
    row[0] = kQuarterRootPi * std::exp(-0.5 * x * x);
    for (int m = 0; m < kmax; ++m) {
        double prev = (m == 0) ? 0.0 : row[m - 1];
        row[m + 1] = x * std::sqrt(2.0 / (m + 1)) * row[m] - std::sqrt(double(m) / (m + 1)) * prev;
    }
    return row;
}

double hermite_product(const MultiIndex& mu, const std::vector<double>& x) {
    if (mu.size() != x.size()) throw std::invalid_argument("hermite_product: dimension mismatch");
    double p = 1.0;
    for (std::size_t j = 0; j < mu.size(); ++j) p *= hermite_function(mu[j], x[j]);
    return p;
}

double laguerre(int j, int alpha, double x) {
    if (j < 0 || j > kMaxIndex) throw std::out_of_range("laguerre: index outside [0, 200]");
    if (j == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int m = 1; m < j; ++m) {
        double next = ((2.0 * m + 1.0 + alpha - x) * cur - (m + alpha) * prev) / (m + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double regularized_upper_gamma(int n, double x) {
    if (n < 1) throw std::domain_error("regularized_upper_gamma: order must be >= 1");
    if (x < 0) throw std::domain_error("regularized_upper_gamma: negative argument");
    // e^(-x) sum_{k<n} x^k / k!, terms built incrementally.
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < n; ++k) {
        term *= x / k;
        sum += term;
    }
    return std::exp(-x) * sum;
}

}  // namespace wigloc
