#pragma once

#include <cstdint>
#include <vector>

namespace credcheck {

// SplitMix64 (Steele, Lea & Flood). Chosen for the seeded shuffle because the
// update is trivially reimplementable bit-for-bit in any language, which keeps
// splits reproducible across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Bounded draw is a plain modulo; the bias is irrelevant here and the rule
  // is part of the documented shuffle so other implementations can match it.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// In-place Fisher-Yates, high index down to 1, j = next_below(i + 1).
template <typename T>
void fisher_yates_shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace credcheck
