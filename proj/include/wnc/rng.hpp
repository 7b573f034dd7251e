#pragma once
// Seeded randomness. All randomized choices in the library flow through one
// of these, so a (config, seed) pair reproduces byte-identical results.

#include <cstdint>
#include <random>

#include "wnc/gf.hpp"

namespace wnc {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  uint32_t below(uint32_t bound) {
    return static_cast<uint32_t>(eng_() % bound);
  }

  uint32_t symbol(const Field& field) { return below(field.order()); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace wnc
