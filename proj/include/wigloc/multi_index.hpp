#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "wigloc/rational.hpp"

namespace wigloc {

using Complex = std::complex<double>;

// Multi-index mu = (mu_1, ..., mu_n), mu_j >= 0.
using MultiIndex = std::vector<int>;

inline int order(const MultiIndex& mu) {
    int s = 0;
    for (int m : mu) s += m;
    return s;
}

BigInt multi_factorial(const MultiIndex& mu);

// "2-0-1" for dimension keys in CSV output and CLI arguments.
std::string format_multi_index(const MultiIndex& mu);
MultiIndex parse_multi_index(const std::string& text, char sep = '-');

// All mu with n entries and |mu| <= max_order, lexicographic.
std::vector<MultiIndex> multi_indices_up_to(int n, int max_order);
// All mu with n entries and |mu| == total, lexicographic.
std::vector<MultiIndex> multi_indices_of_order(int n, int total);

// Phase-space point (x, y) in R^n x R^n.
struct PhasePoint {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t dim() const { return x.size(); }
};

// Finite linear combination sum_mu c_mu H_mu of oscillator eigenstates.
struct HermiteTerm {
    MultiIndex mu;
    Complex coeff;
};

class HermiteSuperposition {
  public:
    HermiteSuperposition() = default;
    explicit HermiteSuperposition(std::vector<HermiteTerm> terms);

    const std::vector<HermiteTerm>& terms() const { return terms_; }
    std::size_t dim() const;
    double norm_sq() const;
    // Scales to unit norm; throws on the zero vector.
    void normalize();

  private:
    std::vector<HermiteTerm> terms_;
};

}  // namespace wigloc
