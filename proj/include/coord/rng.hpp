#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>

namespace coord {

// SplitMix64 finalizer. Output i of a stream keyed by k is mix64(k + i*GOLDEN),
// so streams are pure functions of (key, counter): platform independent,
// trivially splittable, and identical under any parallel schedule.
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// Folds a tag into a key. Deriving with the same tags always yields the same key.
inline std::uint64_t derive_key(std::uint64_t key, std::uint64_t tag) {
  return mix64(key ^ mix64(tag + kGolden));
}

inline std::uint64_t derive_key(std::uint64_t key, std::initializer_list<std::uint64_t> tags) {
  for (std::uint64_t t : tags) key = derive_key(key, t);
  return key;
}

// Order-sensitive hash of a symbol sequence, for keying per-sequence streams.
template <typename Container>
std::uint64_t hash_sequence(const Container& seq) {
  std::uint64_t h = 0x2545F4914F6CDD1Dull;
  for (auto v : seq) h = derive_key(h, static_cast<std::uint64_t>(v));
  return h;
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (ctr_++) * kGolden); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Rejection keeps it exactly uniform.
  std::uint64_t next_below(std::uint64_t bound);

  // Index sampled from an unnormalized nonnegative weight vector.
  Eigen::Index sample(const Eigen::Ref<const Eigen::ArrayXd>& weights);

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace coord
