#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace hetedp {

// Counter-based random streams. Every randomized operation in the project
// draws from a stream derived from one root seed plus (module, purpose,
// index) tags, so each draw is a pure function of (root seed, tags, counter).
// That makes every result reproducible and independent of thread count or
// evaluation order.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

class RngStream {
 public:
  RngStream() : key_(0) {}
  explicit RngStream(std::uint64_t key) : key_(key) {}

  // Root-of-tree construction from the run's seed.
  static RngStream root(std::uint64_t seed) {
    return RngStream(splitmix64(seed ^ 0x7E7E7E7E7E7E7E7EULL));
  }

  // Substream for (module, purpose, index). Derivation is pure counter
  // splitting: no stream ever shares counters with another.
  RngStream sub(std::string_view module, std::string_view purpose,
                std::uint64_t index = 0) const {
    std::uint64_t k = splitmix64(key_ ^ fnv1a64(module));
    k = splitmix64(k ^ fnv1a64(purpose));
    k = splitmix64(k ^ (index * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL));
    return RngStream(k);
  }

  std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64(key_ + counter * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform in [0, 1).
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n > 0.
  std::uint64_t below(std::uint64_t counter, std::uint64_t n) const {
    // 64-bit multiply-shift; bias is negligible for n << 2^64.
    unsigned __int128 m =
        static_cast<unsigned __int128>(bits(counter)) * n;
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller. Coordinate i of a noise vector uses
  // counters (2i, 2i+1), so vectors can be filled in parallel.
  double normal(std::uint64_t counter) const {
    double u1 = (static_cast<double>(bits(2 * counter) >> 11) + 1.0) * 0x1.0p-53;
    double u2 = static_cast<double>(bits(2 * counter + 1) >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
};

// Deterministic partial Fisher-Yates: first k elements of a random
// permutation of [0, n).
inline std::vector<std::size_t> sample_without_replacement(
    const RngStream& rs, std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  if (k > n) k = n;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rs.below(i, n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace hetedp
