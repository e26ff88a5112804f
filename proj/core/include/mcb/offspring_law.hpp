#pragma once

#include <span>
#include <vector>

#include "mcb/rng.hpp"

namespace mcb {

// A critical offspring distribution with finite support: probabilities
// (nu_0, ..., nu_K), mean exactly 1. Immutable after construction; sampling
// takes a caller-owned RNG stream.
class OffspringLaw {
 public:
  // Validates normalization (sum = 1 within 1e-12) and criticality
  // (mean = 1 within 1e-12); throws std::invalid_argument otherwise.
  static OffspringLaw from_probs(std::vector<double> probs);

  // (1/2, 0, 1/2): each branch event kills the particle or doubles it.
  static OffspringLaw binary_critical();

  // (p/2, 1-p, p/2): variance p, a tunable knob with p in (0, 1].
  static OffspringLaw trinomial(double p);

  std::span<const double> probs() const noexcept { return probs_; }
  double sigma2() const noexcept { return sigma2_; }   // sum (k-1)^2 nu_k
  double mu3() const noexcept { return mu3_; }         // sum |k-1|^3 nu_k

  // Finite support makes every moment finite; exposed so callers can assert
  // the third-moment hypothesis explicitly.
  bool third_moment_finite() const noexcept { return true; }

  // Draws k with probability nu_k by inverse CDF over the table.
  int sample(Rng& rng) const noexcept;

 private:
  OffspringLaw() = default;

  std::vector<double> probs_;
  std::vector<double> cdf_;
  double sigma2_ = 0.0;
  double mu3_ = 0.0;
};

}  // namespace mcb
