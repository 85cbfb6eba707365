#pragma once

#include <cstdint>
#include <random>

namespace wlcull {

// One splitmix64 step. Used to derive independent stream seeds from the
// single config seed so every stage is reproducible from the manifest alone.
std::uint64_t mix_seed(std::uint64_t state);

// Seed for stream (base, a, b), e.g. (config seed, k, restart index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

// Deterministic random source. All randomness in the toolkit flows through
// this wrapper; no wall-clock or OS entropy anywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller; avoids the implementation-defined
  // std::normal_distribution so streams are identical across compilers.
  double normal();

  // Uniform index in [0, n). Rejection sampling, no modulo bias.
  std::size_t uniform_index(std::size_t n);

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace wlcull
