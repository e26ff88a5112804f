#include "mcb/offspring_law.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mcb {

namespace {
constexpr double kMomentTol = 1e-12;
}

OffspringLaw OffspringLaw::from_probs(std::vector<double> probs) {
  if (probs.empty())
    throw std::invalid_argument("offspring law: empty probability vector");

  double sum = 0.0, mean = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (!(probs[k] >= 0.0))
      throw std::invalid_argument("offspring law: negative probability at k=" +
                                  std::to_string(k));
    sum += probs[k];
    mean += double(k) * probs[k];
  }
  if (std::abs(sum - 1.0) > kMomentTol)
    throw std::invalid_argument("offspring law: probabilities sum to " +
                                std::to_string(sum) + ", expected 1");
  if (std::abs(mean - 1.0) > kMomentTol)
    throw std::invalid_argument("offspring law: mean " + std::to_string(mean) +
                                " is not critical (expected 1)");

  OffspringLaw law;
  law.probs_ = std::move(probs);
  law.cdf_.resize(law.probs_.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < law.probs_.size(); ++k) {
    acc += law.probs_[k];
    law.cdf_[k] = acc;
    const double d = double(k) - 1.0;
    law.sigma2_ += d * d * law.probs_[k];
    law.mu3_ += std::abs(d * d * d) * law.probs_[k];
  }
  law.cdf_.back() = 1.0;  // guard against rounding in the final bin
  return law;
}

OffspringLaw OffspringLaw::binary_critical() {
  return from_probs({0.5, 0.0, 0.5});
}

OffspringLaw OffspringLaw::trinomial(double p) {
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("trinomial law: p must be in (0, 1]");
  return from_probs({p / 2.0, 1.0 - p, p / 2.0});
}

int OffspringLaw::sample(Rng& rng) const noexcept {
  const double u = rng.uniform();
  // Small support: linear scan beats binary search.
  for (std::size_t k = 0; k + 1 < cdf_.size(); ++k)
    if (u < cdf_[k]) return int(k);
  return int(cdf_.size() - 1);
}

}  // namespace mcb
