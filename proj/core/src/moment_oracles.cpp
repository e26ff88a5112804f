#include "mcb/moment_oracles.hpp"

#include <stdexcept>

namespace mcb {

namespace {

void check(const MomentQuery& q) {
  if (q.table == nullptr)
    throw std::invalid_argument("moment query: missing kernel table");
  if (!(q.t >= 0.0)) throw std::invalid_argument("moment query: t < 0");
  if (q.theta1 < 0 || q.theta2 < 0)
    throw std::invalid_argument("moment query: negative initial density");
}

Site torus_difference(const MomentQuery& q) {
  const Lattice& lat = q.table->lattice();
  Site diff = q.x;
  for (int i = 0; i < lat.dimension(); ++i) diff[i] = q.x[i] - q.y[i];
  return lat.wrap(diff);
}

}  // namespace

double mean_xi(const MomentQuery& q) {
  check(q);
  return double(q.theta1);
}

double mean_eta(const MomentQuery& q) {
  check(q);
  return double(q.theta2);
}

double cross_moment(const MomentQuery& q) {
  check(q);
  return double(q.theta1) * double(q.theta2);
}

double second_moment_xi(const MomentQuery& q) {
  check(q);
  const double v = double(q.theta1), u = double(q.theta2);
  const double g = q.table->green_t(2.0 * q.t, Site{});
  const double p = q.table->p_t(2.0 * q.t, Site{});
  return v * v + 0.5 * q.sigma2 * q.gamma * u * v * g + v * (1.0 - p);
}

double second_moment_eta(const MomentQuery& q) {
  check(q);
  const double v = double(q.theta1), u = double(q.theta2);
  const double g = q.table->green_t(2.0 * q.t, Site{});
  const double p = q.table->p_t(2.0 * q.t, Site{});
  return u * u + 0.5 * q.sigma2 * q.gamma * u * v * g + u * (1.0 - p);
}

double pair_moment_xi(const MomentQuery& q) {
  check(q);
  const Site diff = torus_difference(q);
  if (diff == Site{})
    throw std::invalid_argument(
        "pair_moment_xi: x == y, use second_moment_xi");
  const double v = double(q.theta1), u = double(q.theta2);
  const double g = q.table->green_t(2.0 * q.t, diff);
  const double p = q.table->p_t(2.0 * q.t, diff);
  return v * v - v * p + 0.5 * q.sigma2 * q.gamma * u * v * g;
}

double pair_moment_eta(const MomentQuery& q) {
  check(q);
  const Site diff = torus_difference(q);
  if (diff == Site{})
    throw std::invalid_argument(
        "pair_moment_eta: x == y, use second_moment_eta");
  const double v = double(q.theta1), u = double(q.theta2);
  const double g = q.table->green_t(2.0 * q.t, diff);
  const double p = q.table->p_t(2.0 * q.t, diff);
  return u * u - u * p + 0.5 * q.sigma2 * q.gamma * u * v * g;
}

}  // namespace mcb
