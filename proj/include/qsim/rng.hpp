#pragma once

#include <cstdint>
#include <random>

namespace qsim {

// Single source of randomness.  Every randomized operation takes one of
// these (or a derived seed), so a fixed seed reproduces an entire run.
// mt19937_64 output is identical everywhere; the helpers below avoid
// std::uniform_*_distribution because those vary between standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on [0,1) with 53 random bits
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on [0,n), unbiased via rejection; n >= 1
  std::uint64_t uniform_int(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// nondeterministic seed for callers that did not pick one
std::uint64_t entropy_seed();

}  // namespace qsim
