#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posdiff/diffcalc.hpp"
#include "posdiff/poly.hpp"
#include "posdiff/report.hpp"
#include "posdiff/sampler.hpp"
#include "posdiff/sym_tensor.hpp"

namespace posdiff {

// Raised when a cone function is asked for a point with a negative entry.
struct OutsideCone : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised by tabulated cone functions for points the table does not contain.
// Sampled checks skip such points; the construction itself cannot.
struct MissingSample : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Deterministic map defined on the positive cone of Q^n only.
class ConeFunction {
 public:
  using Eval = std::function<Vec(const Vec&)>;

  ConeFunction(std::size_t nvars, std::size_t codim, Eval eval);
  // Restriction of a polynomial to the cone. The polynomial is not retained.
  static ConeFunction restriction(const VectorPoly& p);

  std::size_t nvars() const { return nvars_; }
  std::size_t codim() const { return codim_; }

  // Throws OutsideCone for points off the cone.
  Vec operator()(const Vec& x) const;

  // View as a black box for the difference operators; off-cone calls still throw.
  BlackBoxFn as_black_box() const;

 private:
  std::size_t nvars_;
  std::size_t codim_;
  std::shared_ptr<const Eval> eval_;
};

// Componentwise positive and negative parts: x = pos - neg, min(pos_i, neg_i) = 0.
std::pair<Vec, Vec> jordan_parts(const Vec& x);

bool in_cone(const Vec& x);

/// Samples the extension hypotheses on the cone:
///   (i)   D^{m+1} f(x; h^{m+1}) = 0,
///   (ii)  D^k f(x; h_1..h_k) >= 0 for 1 <= k <= m,
/// together with f(x) >= 0, since f maps the cone into the cone.
/// Probes at x = 0 with basis increments run before cfg.samples random rounds.
DiffReport check_extension_hypotheses(const ConeFunction& f, unsigned m, const SamplerConfig& cfg);

// f_k(x) = sum_{j=k}^{m} (1/j!) c(j,k) (-1)^(j-k) D^j f(0; x^j), k = 0..m.
// Throws OutsideCone if x has a negative entry.
std::vector<Vec> cone_components(const ConeFunction& f, unsigned m, const Vec& x);

// f(n x) = sum_k f_k(x) n^k for n = 0..m+1.
bool newton_consistent(const ConeFunction& f, const Vec& x, const std::vector<Vec>& components);

struct HypothesisViolation : std::runtime_error {
  HypothesisViolation(std::string condition, DiffReport report);
  std::string condition;
  DiffReport report;
};

/// Symmetric k-linear form with values (1/k!) D^k f_k(0; e_{i_1}, ..., e_{i_k})
/// on basis tuples. Basis vectors lie in the cone, so f_k is never evaluated
/// off the cone; multilinear expansion extends the form to all of Q^n.
SymTensor homogeneous_extend(const ConeFunction& fk, unsigned k);

/// As above, after sampling the hypotheses D^{k+1} f_k(0; h^{k+1}) = 0 and
/// f_k(p x) = p^k f_k(x) for p in {1, 2, 3}, and validating the generated
/// polynomial against f_k at cone samples. Throws HypothesisViolation.
SymTensor homogeneous_extend(const ConeFunction& fk, unsigned k, const SamplerConfig& cfg);

// Value of the form extended one argument at a time by
// A~(x_1, ...) = A(x_1^+, ...) - A(x_1^-, ...), where on cone arguments
// A(x_1..x_k) = (1/k!) D^k f_k(0; x_1..x_k).
Vec jordan_extended_form(const ConeFunction& fk, std::span<const Vec> args);

struct ExtensionResult {
  VectorPoly polynomial;
  std::vector<SymTensor> components;  // order k at index k
  DiffReport hypothesis_report;
  DiffReport agreement_report;
};

/// Builds the positive polynomial of degree <= m that agrees with f on the
/// cone. Agreement is checked at cfg.samples fresh cone points and at every
/// point of extra_points. Throws HypothesisViolation naming the failed condition.
ExtensionResult kantorovich_extend(const ConeFunction& f, unsigned m, const SamplerConfig& cfg,
                                   std::span<const Vec> extra_points = {});

// Cone function backed by a finite table of exact samples; lookups of
// other points throw MissingSample.
ConeFunction tabulated_cone_function(std::size_t nvars, std::size_t codim,
                                     std::vector<std::pair<Vec, Vec>> samples);

}  // namespace posdiff
