#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sqalab {

// Deterministic random streams. All randomness in the project flows from one
// master seed through named substreams (corpus/tasks/augment/init/train), so
// any component can be replayed in isolation. Draw helpers avoid
// std::uniform_*_distribution on purpose: their output differs between
// standard library implementations, and corpus files are required to be
// byte-identical for a given (config, seed).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Derive an independent stream. Substreams of distinct names/indices do not
  // collide for any practical workload (64-bit mixed keys).
  Rng substream(std::string_view name) const;
  Rng substream(std::uint64_t index) const;

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer in [0, n). Rejection sampling, unbiased. n must be > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  // Standard normal via Box-Muller (no internal cache, fully deterministic).
  double normal();

  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Sample m distinct indices from [0, n). Order is the draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t m);

  std::string state() const;
  void restore(const std::string& state);

  std::uint64_t key() const { return key_; }

 private:
  Rng(std::uint64_t key, bool);

  std::uint64_t key_;
  std::mt19937_64 engine_;
};

// Stable 64-bit hash for strings (FNV-1a). Used to key substreams and the
// word-level pseudo-quantizer.
std::uint64_t stable_hash(std::string_view s);

// Mix two 64-bit keys (splitmix64 finalizer over the combination).
std::uint64_t mix_keys(std::uint64_t a, std::uint64_t b);

}  // namespace sqalab
