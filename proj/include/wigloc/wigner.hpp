#pragma once

#include <functional>

#include "wigloc/multi_index.hpp"

namespace wigloc {

// Cross phase-space kernel of two 1-d oscillator eigenstates,
// W_{h_j,h_k}(x, y).  For j >= k, with z = x + i y:
//   pi^-1 sqrt(k!/j!) (-1)^k (sqrt2 conj z)^(j-k) e^(-|z|^2) L_k^(j-k)(2|z|^2);
// the j < k case is the conjugate of the mirrored call.  The conjugate on z
// matches the e^(-i tau.y) transform convention (checked against the
// defining integral); both branches agree at j = k.
Complex wigner_pair_1d(int j, int k, double x, double y);

// n-dimensional cross kernel: product over coordinates.
Complex wigner_pair(const MultiIndex& mu, const MultiIndex& nu, const PhasePoint& p);

// Phase-space distribution of a normalized superposition at p: the full
// sesquilinear double sum.  The imaginary part must cancel; a residual
// above 1e-10 signals a coefficient bug and throws.
double wigner_state(const HermiteSuperposition& psi, const PhasePoint& p);

// psi as a callable wave function on R^n.
using WaveFunction = std::function<Complex(const std::vector<double>&)>;
WaveFunction wave_function(const HermiteSuperposition& psi);

// Same distribution by direct quadrature of the defining integral
// (2 pi)^(-n) integral psi(x + tau/2) conj(psi)(x - tau/2) e^(-i tau.y) dtau
// over [-half_width, half_width]^n with a tensor Gauss-Legendre grid.
// Slow; used as an oracle against the closed form.
double wigner_numeric(const WaveFunction& psi, const PhasePoint& p,
                      double half_width = 12.0, int nodes = 96);

// Everywhere bound pi^(-n) for unit vectors.
double wigner_sup_bound(int n);

}  // namespace wigloc
