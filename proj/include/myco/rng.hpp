#ifndef MYCO_RNG_HPP
#define MYCO_RNG_HPP

#include <cstdint>
#include <cmath>

namespace myco {

// Counter-based deterministic random stream.
//
// A stream is identified by (master_seed, stream_id). Draws are produced by
// applying a 64-bit avalanche mix to key + counter * GOLDEN, so the sequence
// is a pure function of (seed, id, counter): reproducible bit-for-bit,
// trivially seekable, and distinct stream ids give statistically independent
// sequences. Streams are single-owner; do not share across threads.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : key_(derive_key(master_seed, stream_id)), counter_(0), has_cached_(false), cached_(0.0) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * GOLDEN); }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; second value of each pair is cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1, u2;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  double exponential() {
    double u;
    do {
      u = uniform01();
    } while (u <= 0.0);
    return -std::log(u);
  }

  // Poisson by Knuth's product method; large means split recursively so the
  // per-call work stays bounded while the law is exact.
  std::uint64_t poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 30.0) {
      const double half = 0.5 * mean;
      return poisson(half) + poisson(mean - half);
    }
    const double limit = std::exp(-mean);
    std::uint64_t n = 0;
    double prod = uniform01();
    while (prod > limit) {
      ++n;
      prod *= uniform01();
    }
    return n;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

  // splitmix64 finalizer: full-avalanche 64-bit mix.
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t id) {
    return mix(mix(seed + GOLDEN) ^ mix(id * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull));
  }

  std::uint64_t key_;
  std::uint64_t counter_;
  bool has_cached_;
  double cached_;
};

// Stream id layout: particle i uses stream i; auxiliary consumers get ids in
// a reserved high range so they never collide with particle ids.
namespace stream_ids {
constexpr std::uint64_t SIM_NETWORK_BRANCH = 1ull << 62;
constexpr std::uint64_t ORACLE_PATH_BASE = 1ull << 61;
constexpr std::uint64_t AUX_BASE = 1ull << 60;
}  // namespace stream_ids

inline RandomStream rng_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
  return RandomStream(master_seed, stream_id);
}

}  // namespace myco

#endif
