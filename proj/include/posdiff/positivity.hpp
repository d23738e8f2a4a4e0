#pragma once

#include <optional>
#include <vector>

#include "posdiff/poly.hpp"
#include "posdiff/report.hpp"
#include "posdiff/sampler.hpp"
#include "posdiff/sym_tensor.hpp"

namespace posdiff {

struct ComponentVerdict {
  unsigned degree = 0;
  bool nonneg = true;
  std::optional<IndexTuple> witness;
  Vec value;
};

struct PositivityCertificate {
  bool positive = true;
  std::vector<ComponentVerdict> components;  // nonzero components only
  // First failing component, if any.
  const ComponentVerdict* failure() const;
};

/// A polynomial is positive when the symmetric form of every homogeneous
/// component takes nonnegative values on the cone, i.e. on basis tuples.
PositivityCertificate is_positive(const VectorPoly& p);

/// Samples D^r P(x; h_1..h_r) >= 0 for r = 0..r_max at x, h_s in the cone.
/// Probes at x = 0 with basis increments run first, then cfg.samples random
/// rounds. Passing is probabilistic; failure carries witnesses.
DiffReport mixed_diff_nonneg_sample(const VectorPoly& p, unsigned r_max, const SamplerConfig& cfg);

/// Checks D^r P(x; h^r) >= 0 on the cone for r = 0..r_max. An order is
/// certified when every coefficient of the symbolic difference is >= 0.
/// Otherwise it is checked at basis probes, on the {0, 1/2, 1, 3/2, 2}^{2n}
/// grid (capped by cfg.grid_cap) and at cfg.samples random cone points.
DiffReport pure_diff_nonneg_check(const VectorPoly& p, unsigned r_max, const SamplerConfig& cfg);

/// Samples cone lines x + t h (x, h >= 0) and checks that t -> P(x + t h)
/// has nonnegative coefficients, i.e. is a positive polynomial in t.
DiffReport affine_line_sample(const VectorPoly& p, const SamplerConfig& cfg);

// The cubic on Q^3 that is not positive although all of its pure
// differences are nonnegative on the cone.
VectorPoly counterexample_cubic();

struct CounterexampleSuite {
  VectorPoly cubic;
  Rat mixed_coefficient;  // coefficient of x1 x2 x3
  PositivityCertificate positivity;
  Vec top_mixed_difference;  // D^3 P(0; e1, e2, e3)
  Vec value_111;
  Vec value_110;
  DiffReport mixed_report;  // r <= 3
  DiffReport pure_report;   // r <= 3
  DiffReport line_report;
  // Every expectation on the cubic holds.
  bool consistent() const;
};

CounterexampleSuite run_counterexample_suite(const SamplerConfig& cfg);

}  // namespace posdiff
