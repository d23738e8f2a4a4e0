#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "posdiff/rat.hpp"

namespace posdiff {

struct SamplerConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 64;
  unsigned numerator_bound = 20;   // numerators drawn from [-bound, bound]
  unsigned denominator_bound = 8;  // denominators drawn from [1, bound]
  bool cone_only = false;          // restrict draws to nonnegative values
  // Largest number of points taken from a deterministic grid before striding.
  std::size_t grid_cap = 15625;

  // Throws std::invalid_argument if samples or a bound is zero.
  void validate() const;
};

/// Seeded stream of random rationals. Draws are reduced from raw mt19937_64
/// output so a seed reproduces the same stream with any standard library.
class RationalSampler {
 public:
  explicit RationalSampler(const SamplerConfig& cfg);
  RationalSampler(const SamplerConfig& cfg, std::uint64_t stream);

  Rat next();
  Rat next_nonneg();
  Vec next_vec(std::size_t n);
  Vec next_cone_vec(std::size_t n);
  // next_cone_vec when the config is cone_only, next_vec otherwise.
  Vec draw(std::size_t n);

 private:
  std::uint64_t below(std::uint64_t bound);

  SamplerConfig cfg_;
  std::mt19937_64 rng_;
};

/// Points of {0, step, 2 step, ..., max}^dim in lexicographic order. When the
/// grid has more than cap points an evenly strided subset of cap points is used.
class ConeGrid {
 public:
  ConeGrid(std::size_t dim, const Rat& step, unsigned levels, std::size_t cap);

  std::size_t size() const { return count_; }
  std::size_t full_size() const { return full_; }
  Vec point(std::size_t i) const;

 private:
  std::size_t dim_;
  Rat step_;
  unsigned levels_;
  std::size_t full_;
  std::size_t count_;
};

// The default {0, 1/2, 1, 3/2, 2}^dim grid.
ConeGrid default_cone_grid(std::size_t dim, std::size_t cap);

}  // namespace posdiff
