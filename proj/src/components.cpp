#include "posdiff/components.hpp"

#include <stdexcept>

#include "posdiff/combinatorics.hpp"

namespace posdiff {

AlphaMatrix::AlphaMatrix(unsigned m, std::vector<std::vector<Rat>> rows) : m_(m), rows_(std::move(rows)) {
  if (rows_.size() != m + 1) throw std::invalid_argument("alpha matrix must have m+1 rows");
  for (const auto& row : rows_) {
    if (row.size() != m + 1) throw std::invalid_argument("alpha matrix must be square");
  }
}

AlphaMatrix vandermonde_inverse(unsigned m) {
  const unsigned size = m + 1;
  // Augmented [V | I].
  std::vector<std::vector<Rat>> aug(size, std::vector<Rat>(2 * size, Rat(0)));
  for (unsigned j = 0; j < size; ++j) {
    for (unsigned k = 0; k < size; ++k) aug[j][k] = pow(Rat(j), k);
    aug[j][size + j] = 1;
  }
  for (unsigned col = 0; col < size; ++col) {
    unsigned pivot = col;
    while (pivot < size && sgn(aug[pivot][col]) == 0) ++pivot;
    if (pivot == size) throw std::logic_error("Vandermonde matrix is singular");
    std::swap(aug[col], aug[pivot]);
    const Rat inv = 1 / aug[col][col];
    for (auto& q : aug[col]) q *= inv;
    for (unsigned row = 0; row < size; ++row) {
      if (row == col || sgn(aug[row][col]) == 0) continue;
      const Rat factor = aug[row][col];
      for (unsigned c = 0; c < 2 * size; ++c) aug[row][c] -= factor * aug[col][c];
    }
  }
  std::vector<std::vector<Rat>> alpha(size);
  for (unsigned k = 0; k < size; ++k) alpha[k].assign(aug[k].begin() + size, aug[k].end());

  for (unsigned k = 0; k < size; ++k) {
    for (unsigned c = 0; c < size; ++c) {
      Rat entry = 0;
      for (unsigned j = 0; j < size; ++j) entry += alpha[k][j] * pow(Rat(j), c);
      if (entry != (k == c ? 1 : 0)) throw std::logic_error("Vandermonde inverse check failed");
    }
  }
  return AlphaMatrix(m, std::move(alpha));
}

std::vector<Vec> components_by_interpolation(const BlackBoxFn& f, unsigned m, const Vec& x) {
  if (x.size() != f.nvars()) throw std::invalid_argument("components: point dimension mismatch");
  const AlphaMatrix alpha = vandermonde_inverse(m);
  std::vector<Vec> samples;
  samples.reserve(m + 1);
  for (unsigned j = 0; j <= m; ++j) samples.push_back(f(vec_scale(x, Rat(j))));
  std::vector<Vec> out(m + 1, zero_vec(f.codim()));
  for (unsigned k = 0; k <= m; ++k) {
    for (unsigned j = 0; j <= m; ++j) vec_axpy(out[k], alpha(k, j), samples[j]);
  }
  return out;
}

std::vector<Vec> components_by_stirling(const BlackBoxFn& f, unsigned m, const Vec& x) {
  if (x.size() != f.nvars()) throw std::invalid_argument("components: point dimension mismatch");
  const Vec origin = zero_vec(f.nvars());
  std::vector<Vec> diffs;
  diffs.reserve(m + 1);
  for (unsigned j = 0; j <= m; ++j) diffs.push_back(pure_diff_at(f, origin, x, j));
  std::vector<Vec> out(m + 1, zero_vec(f.codim()));
  for (unsigned k = 0; k <= m; ++k) {
    for (unsigned j = k; j <= m; ++j) {
      Rat weight(stirling1_unsigned(j, k), factorial(j));
      weight.canonicalize();
      if ((j - k) % 2 == 1) weight = -weight;
      vec_axpy(out[k], weight, diffs[j]);
    }
  }
  return out;
}

namespace {

// Coefficient of t^k where t is the last variable; the result drops t.
// Lower powers of t must be absent.
VectorPoly lowest_t_coefficient(const VectorPoly& q, unsigned k) {
  const std::size_t n = q.nvars() - 1;
  std::vector<ScalarPoly> coords;
  for (const auto& coord : q.coords()) {
    ScalarPoly c(n);
    for (const auto& [e, coef] : coord.terms()) {
      if (e.back() < k) throw std::logic_error("scaled difference has a t power below its order");
      if (e.back() == k) c.add_term(Exponents(e.begin(), e.end() - 1), coef);
    }
    coords.push_back(std::move(c));
  }
  return VectorPoly(std::move(coords));
}

}  // namespace

VectorPoly component_by_scaling(const VectorPoly& p, unsigned k) {
  const std::size_t n = p.nvars();
  const std::size_t total = n + 1;
  const ScalarPoly t = ScalarPoly::variable(total, n);
  // D^k P(0; (t x)^k) = sum_i (-1)^(k-i) C(k,i) P(i t x).
  VectorPoly diff(total, p.codim());
  const auto xs = variable_block(total, 0, n);
  for (unsigned i = 0; i <= k; ++i) {
    std::vector<ScalarPoly> args;
    args.reserve(n);
    for (const auto& x : xs) args.push_back(x * t * Rat(i));
    const Rat c(binomial(k, i));
    diff += p.compose(args) * ((k - i) % 2 == 0 ? c : Rat(-c));
  }
  return lowest_t_coefficient(diff, k) * (Rat(1) / Rat(factorial(k)));
}

SymTensor tensor_by_scaling(const VectorPoly& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("tensor_by_scaling requires k >= 1");
  const std::size_t n = p.nvars();
  SymTensor out(k, n, p.codim());
  const ScalarPoly t = ScalarPoly::variable(1, 0);
  const Rat scale = Rat(1) / Rat(factorial(k));
  for (const auto& idx : sorted_index_tuples(n, k)) {
    // D^k P(0; t e_{i_1}, ..., t e_{i_k}) as a polynomial in t alone.
    VectorPoly diff(1, p.codim());
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      std::vector<unsigned> counts(n, 0);
      unsigned ones = 0;
      for (unsigned s = 0; s < k; ++s) {
        if ((mask >> s) & 1ul) {
          ++counts[idx[s]];
          ++ones;
        }
      }
      std::vector<ScalarPoly> args;
      args.reserve(n);
      for (unsigned c : counts) args.push_back(t * Rat(c));
      VectorPoly term = p.compose(args);
      if ((k - ones) % 2 == 0) {
        diff += term;
      } else {
        diff -= term;
      }
    }
    const VectorPoly coeff = lowest_t_coefficient(diff, k);
    Vec value;
    value.reserve(p.codim());
    for (const auto& c : coeff.coords()) value.push_back(c.coefficient(Exponents{}) * scale);
    out.set(idx, std::move(value));
  }
  return out;
}

namespace {

// Locates a nonzero value of a nonzero difference polynomial over [x | h].
Witness locate_witness(const VectorPoly& diff, std::size_t n, unsigned order, const SamplerConfig& cfg) {
  auto make = [&](const Vec& x, const Vec& h, Vec value) {
    return Witness{"degree", order, {x, h}, std::move(value)};
  };
  // Small integer grid first so witnesses are readable, then seeded random points.
  const ConeGrid grid(2 * n, Rat(1), 3, cfg.grid_cap);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec pt = grid.point(i);
    Vec value = diff.evaluate(pt);
    if (!is_zero(value)) {
      return make(Vec(pt.begin(), pt.begin() + n), Vec(pt.begin() + n, pt.end()), std::move(value));
    }
  }
  RationalSampler sampler(cfg, 1);
  while (true) {
    Vec pt = sampler.next_vec(2 * n);
    Vec value = diff.evaluate(pt);
    // A nonzero polynomial vanishes on a measure-zero set, so this ends.
    if (!is_zero(value)) {
      return make(Vec(pt.begin(), pt.begin() + n), Vec(pt.begin() + n, pt.end()), std::move(value));
    }
  }
}

}  // namespace

DiffReport degree_test(const BlackBoxFn& f, unsigned m, const SamplerConfig& cfg) {
  cfg.validate();
  DiffReport report;
  report.seed = cfg.seed;
  const unsigned order = m + 1;
  if (const VectorPoly* p = f.polynomial()) {
    const VectorPoly diff = symbolic_pure_diff(*p, order);
    report.samples_used = 0;
    if (diff.is_zero()) {
      report.verdict = Verdict::certified;
    } else {
      report.verdict = Verdict::fail;
      report.witnesses.push_back(locate_witness(diff, p->nvars(), order, cfg));
    }
    report.per_order.push_back({order, report.verdict});
    return report;
  }
  RationalSampler sampler(cfg);
  std::vector<Witness> failures;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Vec x = sampler.draw(f.nvars());
    Vec h = sampler.draw(f.nvars());
    Vec value = pure_diff_at(f, x, h, order);
    if (!is_zero(value)) failures.push_back(Witness{"degree", order, {std::move(x), std::move(h)}, std::move(value)});
  }
  report.samples_used = cfg.samples;
  report.verdict = failures.empty() ? Verdict::probabilistic : Verdict::fail;
  append_witnesses(report, std::move(failures));
  report.per_order.push_back({order, report.verdict});
  return report;
}

DegreeSearch least_degree(const BlackBoxFn& f, unsigned cap, const SamplerConfig& cfg) {
  DegreeSearch out;
  for (unsigned m = 0; m <= cap; ++m) {
    out.report = degree_test(f, m, cfg);
    if (out.report.passed()) {
      out.degree = m;
      return out;
    }
  }
  return out;
}

}  // namespace posdiff
