#pragma once

#include <optional>
#include <vector>

#include "posdiff/diffcalc.hpp"
#include "posdiff/poly.hpp"
#include "posdiff/report.hpp"
#include "posdiff/sampler.hpp"
#include "posdiff/sym_tensor.hpp"

namespace posdiff {

/// Inverse of the (m+1)x(m+1) Vandermonde matrix V[j][k] = j^k (0^0 = 1).
/// Entry (k, j) weights the sample P(j x) in the degree k component.
class AlphaMatrix {
 public:
  AlphaMatrix(unsigned m, std::vector<std::vector<Rat>> rows);

  unsigned degree() const { return m_; }
  const Rat& operator()(unsigned k, unsigned j) const { return rows_.at(k).at(j); }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  unsigned m_;
  std::vector<std::vector<Rat>> rows_;
};

// Exact Gauss-Jordan inversion; the product with V is checked before returning.
AlphaMatrix vandermonde_inverse(unsigned m);

// P_k(x) = sum_j alpha_kj f(j x), k = 0..m.
std::vector<Vec> components_by_interpolation(const BlackBoxFn& f, unsigned m, const Vec& x);

// P_k(x) = sum_{j=k}^{m} (1/j!) c(j,k) (-1)^(j-k) D^j f(0; x^j), k = 0..m.
std::vector<Vec> components_by_stirling(const BlackBoxFn& f, unsigned m, const Vec& x);

/// Degree k component as the t^k coefficient of D^k P(0; (t x)^k), divided by
/// k!. The difference is formed symbolically with t as an extra variable, so
/// the small-t limit becomes an exact coefficient read.
VectorPoly component_by_scaling(const VectorPoly& p, unsigned k);

// Symmetric form of the degree k component from the t^k coefficient of
// D^k P(0; t x_1, ..., t x_k) / k!, on each basis tuple. Requires k >= 1.
SymTensor tensor_by_scaling(const VectorPoly& p, unsigned k);

/// Checks D^{m+1} f(x; h^{m+1}) = 0. Polynomial-backed functions are decided
/// symbolically (certified, or fail with a located witness); opaque ones are
/// sampled at cfg.samples seeded (x, h) pairs (probabilistic, or fail).
DiffReport degree_test(const BlackBoxFn& f, unsigned m, const SamplerConfig& cfg);

struct DegreeSearch {
  std::optional<unsigned> degree;  // least passing m, if any m <= cap passed
  DiffReport report;               // report for that m, or for m = cap
};

inline constexpr unsigned kDefaultDegreeCap = 8;

DegreeSearch least_degree(const BlackBoxFn& f, unsigned cap, const SamplerConfig& cfg);

}  // namespace posdiff
