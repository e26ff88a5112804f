#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mcb {

// Hard upper bound on the lattice dimension; keeps Site a flat value type.
inline constexpr int kMaxDim = 6;

// A lattice point. Coordinates beyond the lattice dimension stay zero so
// equality and hashing can look at the whole array.
struct Site {
  std::array<std::int32_t, kMaxDim> c{};

  std::int32_t& operator[](int i) { return c[std::size_t(i)]; }
  std::int32_t operator[](int i) const { return c[std::size_t(i)]; }

  friend bool operator==(const Site&, const Site&) = default;
};

Site make_site(std::initializer_list<std::int32_t> coords);

struct SiteHash {
  std::size_t operator()(const Site& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int32_t v : s.c) {
      h ^= std::uint64_t(std::uint32_t(v)) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return std::size_t(h ^ (h >> 33));
  }
};

enum class Geometry { InfiniteZd, Torus };

// Site space for the nearest-neighbor walk: either all of Z^d or the torus
// with coordinates in [-n, n] and arithmetic mod 2n+1. Immutable; safe to
// share across threads.
class Lattice {
 public:
  static Lattice infinite(int dimension);
  static Lattice torus(int dimension, int half_width);

  int dimension() const noexcept { return dim_; }
  Geometry geometry() const noexcept { return geo_; }
  bool is_torus() const noexcept { return geo_ == Geometry::Torus; }

  // Torus-only accessors; misuse throws.
  int half_width() const;
  int modulus() const;  // 2n+1
  std::int64_t num_sites() const;

  // Reduces every coordinate into [-n, n]; identity on valid sites.
  // Torus-only.
  Site wrap(const Site& x) const;

  bool valid(const Site& x) const noexcept;

  // The 2d nearest neighbors of x in fixed order: axis 0 plus, axis 0
  // minus, axis 1 plus, ... Wraps on the torus. `out` must hold 2d sites.
  void neighbors(const Site& x, Site* out) const;
  std::vector<Site> neighbors(const Site& x) const;

  // Bijection between torus sites and {0, ..., (2n+1)^d - 1}, lexicographic
  // with the first coordinate most significant.
  std::int64_t site_index(const Site& x) const;
  Site site_at(std::int64_t index) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(int dim, Geometry geo, int half);

  int dim_;
  Geometry geo_;
  int half_;  // 0 for InfiniteZd
  std::int64_t num_sites_;
};

}  // namespace mcb
