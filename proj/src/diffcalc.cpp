#include "posdiff/diffcalc.hpp"

#include <stdexcept>

#include "posdiff/combinatorics.hpp"

namespace posdiff {

BlackBoxFn::BlackBoxFn(std::size_t nvars, std::size_t codim, Eval eval)
    : nvars_(nvars), codim_(codim), eval_(std::move(eval)) {
  if (codim == 0) throw std::invalid_argument("codomain dimension must be >= 1");
  if (!eval_) throw std::invalid_argument("empty evaluation procedure");
}

BlackBoxFn BlackBoxFn::from_poly(VectorPoly p) {
  auto shared = std::make_shared<const VectorPoly>(std::move(p));
  BlackBoxFn f(shared->nvars(), shared->codim(), [shared](const Vec& x) { return shared->evaluate(x); });
  f.poly_ = std::move(shared);
  return f;
}

Vec BlackBoxFn::operator()(const Vec& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("black box: point dimension mismatch");
  Vec y = eval_(x);
  if (y.size() != codim_) throw std::logic_error("black box returned a value of the wrong dimension");
  return y;
}

namespace {

void check_dims(const BlackBoxFn& f, const Vec& x, std::span<const Vec> hs) {
  if (x.size() != f.nvars()) throw std::invalid_argument("difference: base point dimension mismatch");
  for (const auto& h : hs) {
    if (h.size() != f.nvars()) throw std::invalid_argument("difference: increment dimension mismatch");
  }
}

}  // namespace

Vec mixed_diff_at(const BlackBoxFn& f, const Vec& x, std::span<const Vec> hs) {
  check_dims(f, x, hs);
  const std::size_t r = hs.size();
  if (r >= 8 * sizeof(unsigned long)) throw std::invalid_argument("difference order too large");
  Vec sum = zero_vec(f.codim());
  for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
    Vec point = x;
    std::size_t ones = 0;
    for (std::size_t s = 0; s < r; ++s) {
      if ((mask >> s) & 1ul) {
        vec_axpy(point, 1, hs[s]);
        ++ones;
      }
    }
    vec_axpy(sum, (r - ones) % 2 == 0 ? 1 : -1, f(point));
  }
  return sum;
}

Vec mixed_diff_recursive(const BlackBoxFn& f, const Vec& x, std::span<const Vec> hs) {
  check_dims(f, x, hs);
  if (hs.empty()) return f(x);
  const auto head = hs.first(hs.size() - 1);
  return vec_sub(mixed_diff_recursive(f, vec_add(x, hs.back()), head), mixed_diff_recursive(f, x, head));
}

Vec pure_diff_at(const BlackBoxFn& f, const Vec& x, const Vec& h, unsigned r) {
  check_dims(f, x, std::span<const Vec>(&h, 1));
  Vec sum = zero_vec(f.codim());
  for (unsigned k = 0; k <= r; ++k) {
    const Rat c(binomial(r, k));
    vec_axpy(sum, (r - k) % 2 == 0 ? c : Rat(-c), f(vec_add(x, vec_scale(h, k))));
  }
  return sum;
}

Vec newton_expand(const BlackBoxFn& f, const Vec& x, const Vec& h, unsigned r) {
  Vec sum = zero_vec(f.codim());
  for (unsigned k = 0; k <= r; ++k) vec_axpy(sum, Rat(binomial(r, k)), pure_diff_at(f, x, h, k));
  return sum;
}

Vec mixed_from_pure(const BlackBoxFn& f, const Vec& x, std::span<const Vec> hs) {
  check_dims(f, x, hs);
  const std::size_t r = hs.size();
  if (r >= 8 * sizeof(unsigned long)) throw std::invalid_argument("difference order too large");
  Vec sum = zero_vec(f.codim());
  for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
    Vec point = x;
    Vec step = zero_vec(f.nvars());
    std::size_t ones = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if ((mask >> j) & 1ul) {
        vec_axpy(point, 1, hs[j]);
        vec_axpy(step, make_rat(-1, static_cast<long>(j + 1)), hs[j]);
        ++ones;
      }
    }
    vec_axpy(sum, ones % 2 == 0 ? 1 : -1, pure_diff_at(f, point, step, static_cast<unsigned>(r)));
  }
  return sum;
}

VectorPoly symbolic_mixed_diff(const VectorPoly& p, unsigned r) {
  const std::size_t n = p.nvars();
  const std::size_t total = n * (1 + static_cast<std::size_t>(r));
  if (r >= 8 * sizeof(unsigned long)) throw std::invalid_argument("difference order too large");
  VectorPoly out(total, p.codim());
  for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
    std::vector<ScalarPoly> args = variable_block(total, 0, n);
    unsigned ones = 0;
    for (unsigned s = 0; s < r; ++s) {
      if ((mask >> s) & 1ul) {
        const auto block = variable_block(total, n * (s + 1), n);
        for (std::size_t i = 0; i < n; ++i) args[i] += block[i];
        ++ones;
      }
    }
    VectorPoly term = p.compose(args);
    if ((r - ones) % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

VectorPoly symbolic_pure_diff(const VectorPoly& p, unsigned r) {
  const std::size_t n = p.nvars();
  const std::size_t total = 2 * n;
  VectorPoly out(total, p.codim());
  const auto xs = variable_block(total, 0, n);
  const auto hs = variable_block(total, n, n);
  for (unsigned k = 0; k <= r; ++k) {
    std::vector<ScalarPoly> args = xs;
    for (std::size_t i = 0; i < n; ++i) args[i] += hs[i] * Rat(k);
    const Rat c(binomial(r, k));
    out += p.compose(args) * ((r - k) % 2 == 0 ? c : Rat(-c));
  }
  return out;
}

std::vector<std::string> difference_variable_names(std::size_t n, unsigned blocks) {
  std::vector<std::string> names;
  names.reserve(n * (1 + blocks));
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (unsigned s = 1; s <= blocks; ++s) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("h" + std::to_string(s) + "_" + std::to_string(i + 1));
  }
  return names;
}

namespace {

void check_tensor_dims(const SymTensor& a, const Vec& x, std::span<const Vec> hs) {
  if (x.size() != a.nvars()) throw std::invalid_argument("difference: base point dimension mismatch");
  for (const auto& h : hs) {
    if (h.size() != a.nvars()) throw std::invalid_argument("difference: increment dimension mismatch");
  }
}

// Visits every (j_1..j_r) with j_s >= 1 and sum <= k.
template <typename Visit>
void for_each_composition(std::vector<unsigned>& parts, std::size_t pos, unsigned remaining, Visit&& visit) {
  if (pos == parts.size()) {
    visit(remaining);
    return;
  }
  for (unsigned j = 1; j <= remaining; ++j) {
    parts[pos] = j;
    for_each_composition(parts, pos + 1, remaining - j, visit);
  }
}

}  // namespace

Vec homog_mixed_diff_closed(const SymTensor& a, const Vec& x, std::span<const Vec> hs) {
  check_tensor_dims(a, x, hs);
  const unsigned k = a.order();
  Vec sum = zero_vec(a.codim());
  if (hs.size() > k) return sum;
  std::vector<unsigned> parts(hs.size());
  for_each_composition(parts, 0, k, [&](unsigned j0) {
    std::vector<unsigned> all{j0};
    all.insert(all.end(), parts.begin(), parts.end());
    std::vector<std::pair<Vec, unsigned>> pairs{{x, j0}};
    for (std::size_t s = 0; s < hs.size(); ++s) pairs.emplace_back(hs[s], parts[s]);
    vec_axpy(sum, Rat(multinomial(k, all)), tensor_apply_powers(a, pairs));
  });
  return sum;
}

Vec homog_pure_diff_closed(const SymTensor& a, const Vec& x, const Vec& h, unsigned r) {
  check_tensor_dims(a, x, std::span<const Vec>(&h, 1));
  const unsigned k = a.order();
  Vec sum = zero_vec(a.codim());
  for (unsigned j = r; j <= k; ++j) {
    const Nat weight = binomial(k, j) * stirling2(j, r);
    if (weight == 0) continue;
    const std::vector<std::pair<Vec, unsigned>> pairs{{x, k - j}, {h, j}};
    vec_axpy(sum, Rat(weight), tensor_apply_powers(a, pairs));
  }
  return vec_scale(sum, Rat(factorial(r)));
}

}  // namespace posdiff
