#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace mcb {

// Fenwick tree over integer weights, growable on the right. Supports
// O(log n) point update, prefix sum, and sampling of a slot with
// probability weight/total. Weights are exact 64-bit integers so the cached
// total never drifts.
class WeightedIndex {
 public:
  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t total() const noexcept { return total_; }
  std::int64_t weight(std::size_t slot) const noexcept {
    return weights_[slot];
  }

  std::size_t push_back(std::int64_t w) {
    const std::size_t slot = weights_.size();
    weights_.push_back(0);
    tree_.push_back(0);
    // Fold already-accumulated prefix into the new node.
    const std::size_t i = slot + 1;
    const std::size_t lower = i - (i & (~i + 1));  // i - lowbit(i)
    std::int64_t acc = 0;
    if (lower > 0) acc = prefix(lower);
    tree_[slot] = prefix(slot) - acc;
    if (w != 0) add(slot, w);
    return slot;
  }

  void add(std::size_t slot, std::int64_t delta) {
    assert(slot < weights_.size());
    weights_[slot] += delta;
    assert(weights_[slot] >= 0);
    total_ += delta;
    for (std::size_t i = slot + 1; i <= tree_.size(); i += i & (~i + 1))
      tree_[i - 1] += delta;
  }

  void set(std::size_t slot, std::int64_t w) { add(slot, w - weights_[slot]); }

  // Sum of weights in slots [0, count).
  std::int64_t prefix(std::size_t count) const noexcept {
    std::int64_t s = 0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i - 1];
    return s;
  }

  // Slot containing the `target`-th unit of weight, target in [0, total).
  // Each slot is selected with probability weight/total when target is
  // uniform.
  std::size_t find(std::int64_t target) const noexcept {
    assert(target >= 0 && target < total_);
    std::size_t pos = 0;
    std::size_t mask = highest_bit(tree_.size());
    while (mask > 0) {
      const std::size_t next = pos + mask;
      if (next <= tree_.size() && tree_[next - 1] <= target) {
        target -= tree_[next - 1];
        pos = next;
      }
      mask >>= 1;
    }
    return pos;  // first slot with prefix sum > original target
  }

  // Maps a uniform u in [0,1) to a slot proportionally to weight.
  std::size_t sample(double u01) const noexcept {
    auto target = std::int64_t(u01 * double(total_));
    if (target >= total_) target = total_ - 1;  // guard rounding at u ~ 1
    if (target < 0) target = 0;
    return find(target);
  }

 private:
  static std::size_t highest_bit(std::size_t n) noexcept {
    std::size_t m = 1;
    while (m * 2 <= n) m *= 2;
    return n == 0 ? 0 : m;
  }

  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> tree_;
  std::int64_t total_ = 0;
};

}  // namespace mcb
