#include "posdiff/sampler.hpp"

#include <limits>
#include <stdexcept>

namespace posdiff {

void SamplerConfig::validate() const {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (numerator_bound == 0 || denominator_bound == 0) {
    throw std::invalid_argument("sampler bounds must be >= 1");
  }
  if (grid_cap == 0) throw std::invalid_argument("grid cap must be >= 1");
}

RationalSampler::RationalSampler(const SamplerConfig& cfg) : RationalSampler(cfg, 0) {}

RationalSampler::RationalSampler(const SamplerConfig& cfg, std::uint64_t stream)
    : cfg_(cfg), rng_(cfg.seed) {
  cfg_.validate();
  if (stream != 0) {
    // Independent streams for the same seed; seed_seq mixes both words.
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(seq);
  }
}

std::uint64_t RationalSampler::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and library independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return x % bound;
}

Rat RationalSampler::next() {
  const long b = cfg_.numerator_bound;
  const long num = static_cast<long>(below(2 * static_cast<std::uint64_t>(b) + 1)) - b;
  const long den = static_cast<long>(below(cfg_.denominator_bound)) + 1;
  return make_rat(num, den);
}

Rat RationalSampler::next_nonneg() {
  const long num = static_cast<long>(below(static_cast<std::uint64_t>(cfg_.numerator_bound) + 1));
  const long den = static_cast<long>(below(cfg_.denominator_bound)) + 1;
  return make_rat(num, den);
}

Vec RationalSampler::next_vec(std::size_t n) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(next());
  return v;
}

Vec RationalSampler::next_cone_vec(std::size_t n) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(next_nonneg());
  return v;
}

Vec RationalSampler::draw(std::size_t n) { return cfg_.cone_only ? next_cone_vec(n) : next_vec(n); }

ConeGrid::ConeGrid(std::size_t dim, const Rat& step, unsigned levels, std::size_t cap)
    : dim_(dim), step_(step), levels_(levels), full_(1) {
  if (levels == 0 || cap == 0) throw std::invalid_argument("empty grid");
  for (std::size_t i = 0; i < dim; ++i) {
    if (full_ > std::numeric_limits<std::size_t>::max() / levels) {
      full_ = std::numeric_limits<std::size_t>::max();
      break;
    }
    full_ *= levels;
  }
  count_ = full_ < cap ? full_ : cap;
}

Vec ConeGrid::point(std::size_t i) const {
  if (i >= count_) throw std::out_of_range("grid index");
  // Stride through the full grid when capped.
  std::size_t flat = count_ == full_ ? i
                                     : static_cast<std::size_t>(static_cast<long double>(i) * full_ / count_);
  Vec v(dim_);
  for (std::size_t d = dim_; d-- > 0;) {
    v[d] = step_ * static_cast<unsigned long>(flat % levels_);
    flat /= levels_;
  }
  return v;
}

ConeGrid default_cone_grid(std::size_t dim, std::size_t cap) {
  return ConeGrid(dim, make_rat(1, 2), 5, cap);
}

}  // namespace posdiff
