#include "posdiff/sym_tensor.hpp"

#include <algorithm>

#include "posdiff/combinatorics.hpp"

namespace posdiff {

std::vector<IndexTuple> sorted_index_tuples(std::size_t n, unsigned k) {
  std::vector<IndexTuple> out;
  if (k == 0) return {IndexTuple{}};
  if (n == 0) return out;
  IndexTuple idx(k, 0);
  while (true) {
    out.push_back(idx);
    // Advance the rightmost position that can still grow, then reset the tail.
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    const unsigned next = idx[pos] + 1;
    for (unsigned i = pos; i < k; ++i) idx[i] = next;
  }
  return out;
}

SymTensor::SymTensor(unsigned order, std::size_t nvars, std::size_t codim)
    : order_(order), nvars_(nvars), codim_(codim) {
  if (codim == 0) throw std::invalid_argument("codomain dimension must be >= 1");
}

IndexTuple SymTensor::canonical(IndexTuple idx) const {
  if (idx.size() != order_) throw std::invalid_argument("index tuple length != tensor order");
  for (unsigned i : idx) {
    if (i >= nvars_) throw std::invalid_argument("basis index out of range");
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

Vec SymTensor::value(IndexTuple idx) const {
  const auto it = entries_.find(canonical(std::move(idx)));
  return it == entries_.end() ? zero_vec(codim_) : it->second;
}

void SymTensor::set(IndexTuple idx, Vec value) {
  if (value.size() != codim_) throw std::invalid_argument("tensor value has wrong length");
  auto key = canonical(std::move(idx));
  if (is_zero(value)) {
    entries_.erase(key);
  } else {
    entries_[std::move(key)] = std::move(value);
  }
}

Vec tensor_eval(const SymTensor& a, std::span<const Vec> args) {
  if (args.size() != a.order()) throw std::invalid_argument("tensor_eval: wrong number of arguments");
  for (const auto& v : args) {
    if (v.size() != a.nvars()) throw std::invalid_argument("tensor_eval: argument dimension mismatch");
  }
  Vec out = zero_vec(a.codim());
  // Expand every argument in the basis. A stored sorted tuple stands for all
  // of its distinct rearrangements; assign them to argument slots in turn.
  for (const auto& [idx, value] : a.entries()) {
    IndexTuple perm = idx;
    Rat weight = 0;
    do {
      Rat prod = 1;
      for (std::size_t s = 0; s < perm.size() && sgn(prod) != 0; ++s) prod *= args[s][perm[s]];
      weight += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (sgn(weight) != 0) vec_axpy(out, weight, value);
  }
  return out;
}

Vec tensor_apply_powers(const SymTensor& a, std::span<const std::pair<Vec, unsigned>> pairs) {
  unsigned long total = 0;
  for (const auto& p : pairs) total += p.second;
  if (total != a.order()) throw std::invalid_argument("multiplicities do not sum to the tensor order");
  std::vector<Vec> args;
  args.reserve(a.order());
  for (const auto& [v, mult] : pairs) {
    for (unsigned i = 0; i < mult; ++i) args.push_back(v);
  }
  return tensor_eval(a, args);
}

VectorPoly tensor_to_poly(const SymTensor& a) {
  std::vector<ScalarPoly> coords(a.codim(), ScalarPoly(a.nvars()));
  for (const auto& [idx, value] : a.entries()) {
    Exponents exps(a.nvars(), 0);
    for (unsigned i : idx) ++exps[i];
    // Number of argument slots assignments producing this monomial.
    const Rat count(multinomial(a.order(), exps));
    for (std::size_t c = 0; c < a.codim(); ++c) coords[c].add_term(exps, count * value[c]);
  }
  return VectorPoly(std::move(coords));
}

namespace {

void require_homogeneous(const VectorPoly& pk, unsigned k) {
  if (!pk.is_homogeneous(k)) {
    throw NotHomogeneous("polynomial is not homogeneous of degree " + std::to_string(k));
  }
}

unsigned infer_order(const VectorPoly& pk) {
  const auto d = pk.degree();
  if (!d) throw NotHomogeneous("cannot infer the order of the zero polynomial");
  return *d;
}

// Point sum_s coeff_s e_{idx_s} for the given per-slot coefficients.
Vec basis_combination(std::size_t n, const IndexTuple& idx, std::span<const int> coeffs) {
  Vec v = zero_vec(n);
  for (std::size_t s = 0; s < idx.size(); ++s) v[idx[s]] += coeffs[s];
  return v;
}

}  // namespace

SymTensor polarize_signs(const VectorPoly& pk, unsigned k) {
  require_homogeneous(pk, k);
  SymTensor out(k, pk.nvars(), pk.codim());
  const Rat scale = Rat(1) / Rat(Nat(1) << k) / Rat(factorial(k));
  std::vector<int> eps(k);
  for (const auto& idx : sorted_index_tuples(pk.nvars(), k)) {
    Vec sum = zero_vec(pk.codim());
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      int sign = 1;
      for (unsigned s = 0; s < k; ++s) {
        eps[s] = (mask >> s) & 1u ? -1 : 1;
        sign *= eps[s];
      }
      vec_axpy(sum, sign, pk.evaluate(basis_combination(pk.nvars(), idx, eps)));
    }
    out.set(idx, vec_scale(sum, scale));
  }
  return out;
}

SymTensor polarize_signs(const VectorPoly& pk) { return polarize_signs(pk, infer_order(pk)); }

SymTensor polarize_mo(const VectorPoly& pk, unsigned k, const Vec& base) {
  require_homogeneous(pk, k);
  if (base.size() != pk.nvars()) throw std::invalid_argument("polarize_mo: base point dimension mismatch");
  SymTensor out(k, pk.nvars(), pk.codim());
  const Rat scale = Rat(1) / Rat(factorial(k));
  std::vector<int> delta(k);
  for (const auto& idx : sorted_index_tuples(pk.nvars(), k)) {
    Vec sum = zero_vec(pk.codim());
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      unsigned ones = 0;
      for (unsigned s = 0; s < k; ++s) {
        delta[s] = static_cast<int>((mask >> s) & 1u);
        ones += delta[s];
      }
      const Vec point = vec_add(base, basis_combination(pk.nvars(), idx, delta));
      vec_axpy(sum, (k - ones) % 2 == 0 ? 1 : -1, pk.evaluate(point));
    }
    out.set(idx, vec_scale(sum, scale));
  }
  return out;
}

SymTensor polarize_mo(const VectorPoly& pk, const Vec& base) {
  return polarize_mo(pk, infer_order(pk), base);
}

TensorSign tensor_is_nonneg(const SymTensor& a) {
  for (const auto& [idx, value] : a.entries()) {
    if (!is_nonneg(value)) return TensorSign{false, idx, value};
  }
  return TensorSign{};
}

}  // namespace posdiff
