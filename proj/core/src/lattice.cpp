#include "mcb/lattice.hpp"

#include <stdexcept>
#include <string>

namespace mcb {

Site make_site(std::initializer_list<std::int32_t> coords) {
  if (int(coords.size()) > kMaxDim)
    throw std::invalid_argument("make_site: more than kMaxDim coordinates");
  Site s;
  int i = 0;
  for (std::int32_t v : coords) s.c[std::size_t(i++)] = v;
  return s;
}

Lattice::Lattice(int dim, Geometry geo, int half)
    : dim_(dim), geo_(geo), half_(half), num_sites_(0) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("Lattice: dimension must be in [1, " +
                                std::to_string(kMaxDim) + "]");
  if (geo == Geometry::Torus) {
    if (half < 1) throw std::invalid_argument("Lattice: torus needs n >= 1");
    num_sites_ = 1;
    for (int i = 0; i < dim; ++i) num_sites_ *= 2 * std::int64_t(half) + 1;
  }
}

Lattice Lattice::infinite(int dimension) {
  return Lattice(dimension, Geometry::InfiniteZd, 0);
}

Lattice Lattice::torus(int dimension, int half_width) {
  return Lattice(dimension, Geometry::Torus, half_width);
}

int Lattice::half_width() const {
  if (!is_torus()) throw std::logic_error("half_width: not a torus");
  return half_;
}

int Lattice::modulus() const {
  if (!is_torus()) throw std::logic_error("modulus: not a torus");
  return 2 * half_ + 1;
}

std::int64_t Lattice::num_sites() const {
  if (!is_torus()) throw std::logic_error("num_sites: infinite lattice");
  return num_sites_;
}

Site Lattice::wrap(const Site& x) const {
  if (!is_torus()) throw std::logic_error("wrap: not a torus");
  const std::int32_t m = std::int32_t(2 * half_ + 1);
  Site r;
  for (int i = 0; i < dim_; ++i) {
    std::int32_t v = (x[i] + half_) % m;
    if (v < 0) v += m;
    r[i] = v - half_;
  }
  return r;
}

bool Lattice::valid(const Site& x) const noexcept {
  for (int i = dim_; i < kMaxDim; ++i)
    if (x[i] != 0) return false;
  if (geo_ == Geometry::InfiniteZd) return true;
  for (int i = 0; i < dim_; ++i)
    if (x[i] < -half_ || x[i] > half_) return false;
  return true;
}

void Lattice::neighbors(const Site& x, Site* out) const {
  for (int i = 0; i < dim_; ++i) {
    Site plus = x;
    Site minus = x;
    plus[i] += 1;
    minus[i] -= 1;
    if (is_torus()) {
      const std::int32_t m = std::int32_t(2 * half_ + 1);
      if (plus[i] > half_) plus[i] -= m;
      if (minus[i] < -half_) minus[i] += m;
    }
    out[2 * i] = plus;
    out[2 * i + 1] = minus;
  }
}

std::vector<Site> Lattice::neighbors(const Site& x) const {
  std::vector<Site> out(std::size_t(2 * dim_));
  neighbors(x, out.data());
  return out;
}

std::int64_t Lattice::site_index(const Site& x) const {
  if (!is_torus()) throw std::logic_error("site_index: not a torus");
  if (!valid(x)) throw std::invalid_argument("site_index: site out of range");
  const std::int64_t m = 2 * std::int64_t(half_) + 1;
  std::int64_t idx = 0;
  for (int i = 0; i < dim_; ++i) idx = idx * m + (x[i] + half_);
  return idx;
}

Site Lattice::site_at(std::int64_t index) const {
  if (!is_torus()) throw std::logic_error("site_at: not a torus");
  if (index < 0 || index >= num_sites_)
    throw std::invalid_argument("site_at: index out of range");
  const std::int64_t m = 2 * std::int64_t(half_) + 1;
  Site s;
  for (int i = dim_ - 1; i >= 0; --i) {
    s[i] = std::int32_t(index % m) - half_;
    index /= m;
  }
  return s;
}

}  // namespace mcb
