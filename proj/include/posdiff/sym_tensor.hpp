#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posdiff/poly.hpp"
#include "posdiff/rat.hpp"

namespace posdiff {

// Basis index tuple (i_1 <= ... <= i_k), zero based.
using IndexTuple = std::vector<unsigned>;

// All nondecreasing k-tuples over 0..n-1, in lexicographic order.
std::vector<IndexTuple> sorted_index_tuples(std::size_t n, unsigned k);

/// Symmetric k-linear map (Q^n)^k -> Q^m, stored by its values on sorted
/// basis tuples. Only nonzero values are kept, so equality is structural.
/// Order 0 tensors hold one constant under the empty tuple.
class SymTensor {
 public:
  SymTensor(unsigned order, std::size_t nvars, std::size_t codim);

  unsigned order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t codim() const { return codim_; }
  const std::map<IndexTuple, Vec>& entries() const { return entries_; }

  // Value on basis vectors e_{i_1}, ..., e_{i_k}; the tuple need not be sorted.
  Vec value(IndexTuple idx) const;
  void set(IndexTuple idx, Vec value);

  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  IndexTuple canonical(IndexTuple idx) const;

  unsigned order_;
  std::size_t nvars_;
  std::size_t codim_;
  std::map<IndexTuple, Vec> entries_;
};

struct NotHomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Multilinear evaluation A(args[0], ..., args[k-1]).
Vec tensor_eval(const SymTensor& a, std::span<const Vec> args);

// A(v^{j_1}, w^{j_2}, ...): each vector repeated by its multiplicity.
// Throws std::invalid_argument unless the multiplicities sum to the order.
Vec tensor_apply_powers(const SymTensor& a, std::span<const std::pair<Vec, unsigned>> pairs);

// The k-homogeneous polynomial x -> A(x, ..., x).
VectorPoly tensor_to_poly(const SymTensor& a);

/// Recovers the symmetric form of a k-homogeneous polynomial from the sign
/// sum (1/(2^k k!)) sum_eps eps_1...eps_k P(eps_1 x_1 + ... + eps_k x_k),
/// evaluated on each sorted basis tuple. Throws NotHomogeneous.
SymTensor polarize_signs(const VectorPoly& pk, unsigned k);
// Infers k from the degree; the zero polynomial has no order and is rejected.
SymTensor polarize_signs(const VectorPoly& pk);

/// Vertex-sum polarization (1/k!) sum_delta (-1)^(k - |delta|)
/// P(base + delta_1 x_1 + ... + delta_k x_k). The result does not depend on
/// the base point.
SymTensor polarize_mo(const VectorPoly& pk, unsigned k, const Vec& base);
SymTensor polarize_mo(const VectorPoly& pk, const Vec& base);

struct TensorSign {
  bool nonneg = true;
  std::optional<IndexTuple> witness;  // first negative entry in tuple order
  Vec value;
};

// A symmetric form is positive on the cone iff every basis value is >= 0,
// because the cone is generated by the basis vectors.
TensorSign tensor_is_nonneg(const SymTensor& a);

}  // namespace posdiff
