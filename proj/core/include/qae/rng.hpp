#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qae {

/// splitmix64 finalizer; used to derive independent seed streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic sub-stream seed: base ^ hash(a, b). Results do not
/// depend on evaluation order, so derived streams may run in parallel.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b) {
  return base ^ splitmix64((a << 32) ^ b);
}

/// xoshiro256++ with splitmix64 state expansion. Self-contained so the
/// draw sequence for a given seed is pinned on every platform and
/// standard library.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::uint64_t seed) {
    s_[0] = splitmix64(seed);
    s_[1] = splitmix64(s_[0]);
    s_[2] = splitmix64(s_[1]);
    s_[3] = splitmix64(s_[2]);
  }

  std::uint64_t operator()() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

/// Uniform double in (0, 1], mapped from the top 53 bits of the draw.
/// Pinned arithmetic: identical output for identical generator state on
/// every platform (std::uniform_real_distribution makes no such promise).
template <typename Rng>
double uniform01(Rng& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Bounded draw in [0, bound) by the multiply-shift reduction. The tiny
/// modulo bias is irrelevant for sampling; what matters is that the
/// mapping is fixed.
template <typename Rng>
std::uint64_t bounded_draw(Rng& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

/// Fisher-Yates shuffle with pinned draw mapping.
template <typename T, typename Rng>
void shuffle_inplace(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_draw(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace qae
