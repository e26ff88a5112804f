#pragma once

#include <span>
#include <vector>

#include "mcb/lattice.hpp"

namespace mcb {

// Spectral representation of the continuous-time nearest-neighbor walk on a
// torus with jump rate kappa:
//
//   p_t(x) = |L|^{-1} sum_k exp(lambda_k t) cos(2 pi k.x / (2n+1))
//   lambda_k = -kappa (1 - d^{-1} sum_i cos(2 pi k_i / (2n+1)))
//
// lambda_0 = 0 and all other eigenvalues are strictly negative, so the
// kernel identities (normalization, symmetry, Chapman-Kolmogorov, the Green
// equation) hold per mode and survive to roundoff. Immutable after
// construction.
class KernelTable {
 public:
  KernelTable(const Lattice& torus, double kappa);

  const Lattice& lattice() const noexcept { return lat_; }
  double kappa() const noexcept { return kappa_; }

  // Eigenvalues indexed by the mode's site_index. eigenvalues()[index of 0]
  // is exactly 0.
  std::span<const double> eigenvalues() const noexcept { return eig_; }

  // Transition probability p_t(0, x). Requires t >= 0.
  double p_t(double t, const Site& x) const;

  // Green function g_t(x) = integral_0^t p_s(x) ds, evaluated in closed form
  // per mode ((e^{lambda t}-1)/lambda, with the lambda=0 mode contributing
  // exactly t).
  double green_t(double t, const Site& x) const;

  // (P_t f)(x) = sum_y p_t(x-y) f(y) for a field indexed by site_index.
  std::vector<double> apply_semigroup(double t,
                                      std::span<const double> f) const;

  // (Q f)(x) = kappa [ (2d)^{-1} sum_{y~x} f(y) - f(x) ].
  std::vector<double> apply_generator(std::span<const double> f) const;

 private:
  double mode_sum(const Site& x, std::span<const double> weights) const;

  Lattice lat_;
  double kappa_;
  std::vector<double> eig_;        // by mode index
  std::vector<Site> modes_;        // mode index -> mode coordinates
  std::vector<double> cos_table_;  // cos(2 pi j / M), j in [0, M)
};

// Green function g_infinity(x) for the nearest-neighbor walk on Z^d, d >= 3,
// by Fourier quadrature of
//
//   kappa^{-1} * int_{[-1/2,1/2]^d} cos(2 pi phi.x) / (1 - d^{-1} sum cos(2 pi phi_i)) dphi.
//
// The integrable singularity at phi = 0 is removed with a Duffy split (one
// pyramid per dominant axis; the r^{d-1} Jacobian cancels the |phi|^{-2}
// pole), after which tensor Gauss-Legendre converges rapidly. The order is
// raised until two successive refinements agree within `tolerance`.
// Throws std::domain_error for d <= 2 (recurrent walk, divergent integral).
double green_infinity_zd(int d, double kappa, const Site& x,
                         double tolerance = 1e-6);

// The threshold 1 / (sqrt(3^5) (g_inf_0 / 2 + 1)) that gamma * sigma^2 must
// stay strictly below for the finite-system-scheme hypothesis.
double max_gamma_sigma2(double g_inf_0);

}  // namespace mcb
