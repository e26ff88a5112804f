#pragma once

#include <cstdint>

#include "mcb/kernels.hpp"
#include "mcb/lattice.hpp"

namespace mcb {

// Closed-form moments of the torus particle system started from constant
// initial fields xi_0 = theta1 (v) and eta_0 = theta2 (u). The kernel values
// g_{2t} and p_{2t} always come from the spectral table, never from
// simulation, so these stay independent verification targets.
struct MomentQuery {
  const KernelTable* table = nullptr;
  double t = 0.0;
  double gamma = 0.0;
  double sigma2 = 0.0;
  std::int64_t theta1 = 0;  // v
  std::int64_t theta2 = 0;  // u
  Site x{};
  Site y{};
};

// E xi_t(x) = v, independent of t and x.
double mean_xi(const MomentQuery& q);
// E eta_t(x) = u.
double mean_eta(const MomentQuery& q);

// E xi_t(x) eta_t(y) = v u for every x, y.
double cross_moment(const MomentQuery& q);

// E xi_t(x)^2 = v^2 + (1/2) sigma^2 gamma u v g_{2t}(0) + v (1 - p_{2t}(0)).
double second_moment_xi(const MomentQuery& q);
// Same with u and v swapped in the walk term.
double second_moment_eta(const MomentQuery& q);

// E xi_t(x) xi_t(y) for x != y:
//   v^2 - v p_{2t}(x-y) + (1/2) sigma^2 gamma u v g_{2t}(x-y).
// The difference x-y is taken on the torus. x == y throws.
double pair_moment_xi(const MomentQuery& q);
double pair_moment_eta(const MomentQuery& q);

}  // namespace mcb
