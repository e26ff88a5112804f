#include "mcb/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcb {

namespace {
constexpr double kPi = std::numbers::pi;
}

KernelTable::KernelTable(const Lattice& torus, double kappa)
    : lat_(torus), kappa_(kappa) {
  if (!lat_.is_torus())
    throw std::invalid_argument("KernelTable: lattice must be a torus");
  if (!(kappa > 0.0))
    throw std::invalid_argument("KernelTable: kappa must be positive");

  const int d = lat_.dimension();
  const int m = lat_.modulus();
  const std::int64_t size = lat_.num_sites();

  cos_table_.resize(std::size_t(m));
  for (int j = 0; j < m; ++j)
    cos_table_[std::size_t(j)] = std::cos(2.0 * kPi * double(j) / double(m));

  eig_.resize(std::size_t(size));
  modes_.resize(std::size_t(size));
  for (std::int64_t idx = 0; idx < size; ++idx) {
    const Site k = lat_.site_at(idx);
    modes_[std::size_t(idx)] = k;
    double c = 0.0;
    for (int i = 0; i < d; ++i) {
      int j = k[i] % m;
      if (j < 0) j += m;
      c += cos_table_[std::size_t(j)];
    }
    double lambda = -kappa_ * (1.0 - c / double(d));
    if (k == Site{}) lambda = 0.0;  // pin the conservation mode exactly
    eig_[std::size_t(idx)] = lambda;
  }
}

double KernelTable::mode_sum(const Site& x,
                             std::span<const double> weights) const {
  const int d = lat_.dimension();
  const int m = lat_.modulus();
  double acc = 0.0;
  for (std::size_t idx = 0; idx < weights.size(); ++idx) {
    const Site& k = modes_[idx];
    std::int64_t dot = 0;
    for (int i = 0; i < d; ++i) dot += std::int64_t(k[i]) * x[i];
    int j = int(dot % m);
    if (j < 0) j += m;
    acc += weights[idx] * cos_table_[std::size_t(j)];
  }
  return acc / double(lat_.num_sites());
}

double KernelTable::p_t(double t, const Site& x) const {
  if (!(t >= 0.0)) throw std::invalid_argument("p_t: t must be >= 0");
  std::vector<double> w(eig_.size());
  for (std::size_t i = 0; i < eig_.size(); ++i) w[i] = std::exp(eig_[i] * t);
  return mode_sum(lat_.wrap(x), w);
}

double KernelTable::green_t(double t, const Site& x) const {
  if (!(t >= 0.0)) throw std::invalid_argument("green_t: t must be >= 0");
  std::vector<double> w(eig_.size());
  for (std::size_t i = 0; i < eig_.size(); ++i) {
    const double lambda = eig_[i];
    w[i] = (lambda == 0.0) ? t : (std::expm1(lambda * t) / lambda);
  }
  return mode_sum(lat_.wrap(x), w);
}

std::vector<double> KernelTable::apply_semigroup(
    double t, std::span<const double> f) const {
  const std::int64_t size = lat_.num_sites();
  if (std::int64_t(f.size()) != size)
    throw std::invalid_argument("apply_semigroup: field size mismatch");

  // Tabulate p_t(z) once, then convolve on the torus.
  std::vector<double> pt(std::size_t(size));
  std::vector<double> w(eig_.size());
  for (std::size_t i = 0; i < eig_.size(); ++i) w[i] = std::exp(eig_[i] * t);
  for (std::int64_t z = 0; z < size; ++z)
    pt[std::size_t(z)] = mode_sum(lat_.site_at(z), w);

  std::vector<double> out(std::size_t(size), 0.0);
  for (std::int64_t xi = 0; xi < size; ++xi) {
    const Site x = lat_.site_at(xi);
    double acc = 0.0;
    for (std::int64_t yi = 0; yi < size; ++yi) {
      Site diff = lat_.site_at(yi);
      for (int i = 0; i < lat_.dimension(); ++i) diff[i] = x[i] - diff[i];
      acc += pt[std::size_t(lat_.site_index(lat_.wrap(diff)))] *
             f[std::size_t(yi)];
    }
    out[std::size_t(xi)] = acc;
  }
  return out;
}

std::vector<double> KernelTable::apply_generator(
    std::span<const double> f) const {
  const std::int64_t size = lat_.num_sites();
  if (std::int64_t(f.size()) != size)
    throw std::invalid_argument("apply_generator: field size mismatch");
  const int d = lat_.dimension();
  std::vector<Site> nb(std::size_t(2 * d));
  std::vector<double> out(std::size_t(size));
  for (std::int64_t xi = 0; xi < size; ++xi) {
    lat_.neighbors(lat_.site_at(xi), nb.data());
    double acc = 0.0;
    for (const Site& y : nb) acc += f[std::size_t(lat_.site_index(y))];
    out[std::size_t(xi)] =
        kappa_ * (acc / double(2 * d) - f[std::size_t(xi)]);
  }
  return out;
}

namespace {

// Integrand of the g_infinity Fourier integral on one Duffy pyramid.
// phi = r * v where v has v[axis] = 1 and the other coordinates in [0,1].
// Gauss nodes keep r strictly positive, so the denominator never vanishes.
double duffy_integrand(int d, const Site& x, int axis, double r,
                       const double* u) {
  double phi[kMaxDim];
  int ui = 0;
  for (int i = 0; i < d; ++i)
    phi[i] = (i == axis) ? r : r * u[ui++];
  double csum = 0.0, arg_cos = 1.0;
  for (int i = 0; i < d; ++i) {
    csum += std::cos(2.0 * kPi * phi[i]);
    if (x[i] != 0) arg_cos *= std::cos(2.0 * kPi * phi[i] * double(x[i]));
  }
  const double denom = 1.0 - csum / double(d);
  // jacobian r^{d-1} cancels the |phi|^{-2} pole for d >= 3
  double jac = 1.0;
  for (int i = 0; i < d - 1; ++i) jac *= r;
  return arg_cos * jac / denom;
}

// Gauss-Legendre nodes/weights on [0,1] by Newton iteration on P_m.
void gauss_legendre_unit(int m, std::vector<double>& nodes,
                         std::vector<double>& weights) {
  nodes.resize(std::size_t(m));
  weights.resize(std::size_t(m));
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess on [-1,1]
    double z = std::cos(kPi * (double(i) + 0.75) / (double(m) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - double(j) * p2) / double(j + 1);
      }
      pp = double(m) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[std::size_t(i)] = 0.5 * (1.0 - z);  // map to [0,1], ascending later
    weights[std::size_t(i)] = 1.0 / ((1.0 - z * z) * pp * pp);
  }
}

// One quadrature pass at tensor order m. Integrates over the d pyramids of
// [0, 1/2]^d and applies the 2^d symmetry factor and 1/kappa time change.
double g_inf_pass(int d, double kappa, const Site& x, int m) {
  std::vector<double> xr, wr;
  gauss_legendre_unit(m, xr, wr);

  const int nu = d - 1;  // transverse coordinates per pyramid; >= 2 here
  std::vector<std::size_t> ix(std::size_t(nu), 0);
  double total = 0.0;
  for (int axis = 0; axis < d; ++axis) {
    for (int ir = 0; ir < m; ++ir) {
      const double r = 0.5 * xr[std::size_t(ir)];
      const double wrr = 0.5 * wr[std::size_t(ir)];
      // Tensor loop over the transverse unit cube.
      std::fill(ix.begin(), ix.end(), 0);
      while (true) {
        double u[kMaxDim];
        double wu = 1.0;
        for (int i = 0; i < nu; ++i) {
          u[i] = xr[ix[std::size_t(i)]];
          wu *= wr[ix[std::size_t(i)]];
        }
        total += wrr * wu * duffy_integrand(d, x, axis, r, u);
        int carry = 0;
        while (carry < nu) {
          if (++ix[std::size_t(carry)] < std::size_t(m)) break;
          ix[std::size_t(carry)] = 0;
          ++carry;
        }
        if (carry == nu) break;
      }
    }
  }
  double sym = 1.0;
  for (int i = 0; i < d; ++i) sym *= 2.0;
  return sym * total / kappa;
}

}  // namespace

double green_infinity_zd(int d, double kappa, const Site& x,
                         double tolerance) {
  if (d <= 2)
    throw std::domain_error(
        "green_infinity_zd: walk is recurrent for d <= 2, g_infinity "
        "diverges");
  if (d > kMaxDim)
    throw std::invalid_argument("green_infinity_zd: dimension above kMaxDim");
  if (!(kappa > 0.0))
    throw std::invalid_argument("green_infinity_zd: kappa must be positive");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("green_infinity_zd: tolerance must be > 0");

  double prev = g_inf_pass(d, kappa, x, 8);
  for (int m : {12, 16, 24, 32, 48, 64, 96}) {
    const double cur = g_inf_pass(d, kappa, x, m);
    if (std::abs(cur - prev) < 0.5 * tolerance) return cur;
    prev = cur;
  }
  throw std::runtime_error(
      "green_infinity_zd: quadrature did not reach tolerance " +
      std::to_string(tolerance));
}

double max_gamma_sigma2(double g_inf_0) {
  if (!(g_inf_0 >= 0.0))
    throw std::invalid_argument("max_gamma_sigma2: g_inf_0 must be >= 0");
  return 1.0 / (std::sqrt(243.0) * (0.5 * g_inf_0 + 1.0));
}

}  // namespace mcb
