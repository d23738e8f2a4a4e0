#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "posdiff/poly.hpp"
#include "posdiff/rat.hpp"
#include "posdiff/sym_tensor.hpp"

namespace posdiff {

/// Opaque deterministic map Q^n -> Q^m. Functions wrapped from a VectorPoly
/// keep the polynomial so symbolic checks can use it.
class BlackBoxFn {
 public:
  using Eval = std::function<Vec(const Vec&)>;

  BlackBoxFn(std::size_t nvars, std::size_t codim, Eval eval);
  static BlackBoxFn from_poly(VectorPoly p);

  std::size_t nvars() const { return nvars_; }
  std::size_t codim() const { return codim_; }
  // nullptr for opaque functions.
  const VectorPoly* polynomial() const { return poly_.get(); }

  // Checks the argument and result dimensions.
  Vec operator()(const Vec& x) const;

 private:
  std::size_t nvars_;
  std::size_t codim_;
  Eval eval_;
  std::shared_ptr<const VectorPoly> poly_;
};

// Vertex sum: sum over delta in {0,1}^r of (-1)^(r-|delta|) f(x + sum delta_s h_s).
Vec mixed_diff_at(const BlackBoxFn& f, const Vec& x, std::span<const Vec> hs);

// Same value from the recursive definition
// D^r f(x; h_1..h_r) = D^{r-1} f(x + h_r; h_1..h_{r-1}) - D^{r-1} f(x; h_1..h_{r-1}).
Vec mixed_diff_recursive(const BlackBoxFn& f, const Vec& x, std::span<const Vec> hs);

// sum_{k=0}^{r} (-1)^(r-k) C(r,k) f(x + k h). r = 0 gives f(x).
Vec pure_diff_at(const BlackBoxFn& f, const Vec& x, const Vec& h, unsigned r);

// sum_{k=0}^{r} C(r,k) D^k f(x; h^k), which equals f(x + r h) for any f.
Vec newton_expand(const BlackBoxFn& f, const Vec& x, const Vec& h, unsigned r);

/// Mixed difference as a combination of pure ones:
/// sum over delta in {0,1}^r of (-1)^|delta| D^r f(x + sum delta_j h_j; (g)^r)
/// where the repeated increment is g = -sum_j delta_j h_j / j (j one based).
Vec mixed_from_pure(const BlackBoxFn& f, const Vec& x, std::span<const Vec> hs);

/// D^r P(x; h_1..h_r) as a polynomial in n(1+r) variables laid out in blocks
/// [x | h_1 | ... | h_r]; variable s*n + i is coordinate i of block s.
VectorPoly symbolic_mixed_diff(const VectorPoly& p, unsigned r);

// D^r P(x; h^r) over 2n variables [x | h].
VectorPoly symbolic_pure_diff(const VectorPoly& p, unsigned r);

// Names for the block layout: x1..xn, then h1_1..h1_n, h2_1.. and so on.
std::vector<std::string> difference_variable_names(std::size_t n, unsigned blocks);

/// Mixed difference of the homogeneous polynomial generated by A from the
/// multinomial expansion over j_0 >= 0, j_1..j_r >= 1 summing to k.
/// Zero when r > k.
Vec homog_mixed_diff_closed(const SymTensor& a, const Vec& x, std::span<const Vec> hs);

/// Pure difference of the homogeneous polynomial generated by A:
/// r! sum_{j=r}^{k} C(k,j) S(j,r) A(x^{k-j}, h^j).
Vec homog_pure_diff_closed(const SymTensor& a, const Vec& x, const Vec& h, unsigned r);

}  // namespace posdiff
