#include "posdiff/kantorovich.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "posdiff/combinatorics.hpp"

namespace posdiff {

ConeFunction::ConeFunction(std::size_t nvars, std::size_t codim, Eval eval)
    : nvars_(nvars), codim_(codim), eval_(std::make_shared<const Eval>(std::move(eval))) {
  if (codim == 0) throw std::invalid_argument("codomain dimension must be >= 1");
  if (!*eval_) throw std::invalid_argument("empty evaluation procedure");
}

ConeFunction ConeFunction::restriction(const VectorPoly& p) {
  return ConeFunction(p.nvars(), p.codim(), [p](const Vec& x) { return p.evaluate(x); });
}

bool in_cone(const Vec& x) { return is_nonneg(x); }

Vec ConeFunction::operator()(const Vec& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("cone function: point dimension mismatch");
  if (!in_cone(x)) throw OutsideCone("cone function evaluated outside the cone at " + to_string(x));
  Vec y = (*eval_)(x);
  if (y.size() != codim_) throw std::logic_error("cone function returned a value of the wrong dimension");
  return y;
}

BlackBoxFn ConeFunction::as_black_box() const {
  return BlackBoxFn(nvars_, codim_, [self = *this](const Vec& x) { return self(x); });
}

std::pair<Vec, Vec> jordan_parts(const Vec& x) {
  Vec pos = zero_vec(x.size());
  Vec neg = zero_vec(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) > 0) {
      pos[i] = x[i];
    } else {
      neg[i] = -x[i];
    }
  }
  return {std::move(pos), std::move(neg)};
}

HypothesisViolation::HypothesisViolation(std::string cond, DiffReport rep)
    : std::runtime_error("extension hypothesis " + cond + " violated"),
      condition(std::move(cond)),
      report(std::move(rep)) {}

DiffReport check_extension_hypotheses(const ConeFunction& f, unsigned m, const SamplerConfig& cfg) {
  cfg.validate();
  const BlackBoxFn g = f.as_black_box();
  const std::size_t n = f.nvars();
  DiffReport report;
  report.seed = cfg.seed;
  // Orders 0 (range), 1..m (condition ii) and m+1 (condition i).
  std::vector<bool> failed(m + 2, false);

  auto record = [&](std::vector<Witness>& sink, const char* cond, unsigned order, std::vector<Vec> points,
                    Vec value) {
    failed[order] = true;
    sink.push_back(Witness{cond, order, std::move(points), std::move(value)});
  };
  // Evaluates one difference; points missing from a table skip the check.
  auto sample = [&](auto&& compute) -> std::optional<Vec> {
    try {
      Vec value = compute();
      ++report.samples_used;
      return value;
    } catch (const MissingSample&) {
      return std::nullopt;
    }
  };
  auto check_range = [&](std::vector<Witness>& sink, const Vec& x) {
    auto value = sample([&] { return g(x); });
    if (value && !is_nonneg(*value)) record(sink, "range", 0, {x}, std::move(*value));
  };
  auto check_vanishing = [&](std::vector<Witness>& sink, const Vec& x, const Vec& h) {
    auto value = sample([&] { return pure_diff_at(g, x, h, m + 1); });
    if (value && !is_zero(*value)) record(sink, "(i)", m + 1, {x, h}, std::move(*value));
  };
  auto check_monotone = [&](std::vector<Witness>& sink, const Vec& x, const std::vector<Vec>& hs) {
    auto value = sample([&] { return mixed_diff_at(g, x, hs); });
    if (!value || is_nonneg(*value)) return;
    std::vector<Vec> points{x};
    points.insert(points.end(), hs.begin(), hs.end());
    record(sink, "(ii)", static_cast<unsigned>(hs.size()), std::move(points), std::move(*value));
  };

  std::vector<Witness> probe_failures;
  const Vec origin = zero_vec(n);
  check_range(probe_failures, origin);
  std::vector<Vec> steps;
  for (std::size_t i = 0; i < n; ++i) steps.push_back(unit_vec(n, i));
  steps.push_back(Vec(n, Rat(1)));
  for (const auto& h : steps) check_vanishing(probe_failures, origin, h);
  for (unsigned k = 1; k <= m; ++k) {
    const auto tuples = sorted_index_tuples(n, k);
    const std::size_t limit = std::min(tuples.size(), cfg.grid_cap);
    for (std::size_t t = 0; t < limit; ++t) {
      std::vector<Vec> hs;
      for (unsigned i : tuples[t]) hs.push_back(unit_vec(n, i));
      check_monotone(probe_failures, origin, hs);
    }
  }

  std::vector<Witness> random_failures;
  RationalSampler sampler(cfg);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Vec x = sampler.next_cone_vec(n);
    check_range(random_failures, x);
    check_vanishing(random_failures, x, sampler.next_cone_vec(n));
    for (unsigned k = 1; k <= m; ++k) {
      std::vector<Vec> hs;
      for (unsigned j = 0; j < k; ++j) hs.push_back(sampler.next_cone_vec(n));
      check_monotone(random_failures, x, hs);
    }
  }

  for (unsigned order = 0; order <= m + 1; ++order) {
    report.per_order.push_back({order, failed[order] ? Verdict::fail : Verdict::probabilistic});
  }
  const bool any = std::find(failed.begin(), failed.end(), true) != failed.end();
  report.verdict = any ? Verdict::fail : Verdict::probabilistic;
  append_witnesses(report, std::move(probe_failures));
  append_witnesses(report, std::move(random_failures));
  return report;
}

std::vector<Vec> cone_components(const ConeFunction& f, unsigned m, const Vec& x) {
  if (x.size() != f.nvars()) throw std::invalid_argument("cone_components: point dimension mismatch");
  if (!in_cone(x)) throw OutsideCone("cone_components: point outside the cone " + to_string(x));
  const BlackBoxFn g = f.as_black_box();
  const Vec origin = zero_vec(f.nvars());
  std::vector<Vec> diffs;
  diffs.reserve(m + 1);
  for (unsigned j = 0; j <= m; ++j) diffs.push_back(pure_diff_at(g, origin, x, j));
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

bool newton_consistent(const ConeFunction& f, const Vec& x, const std::vector<Vec>& components) {
  const auto m = static_cast<unsigned>(components.size()) - 1;
  for (unsigned n = 0; n <= m + 1; ++n) {
    Vec predicted = zero_vec(f.codim());
    for (unsigned k = 0; k <= m; ++k) vec_axpy(predicted, pow(Rat(n), k), components[k]);
    if (predicted != f(vec_scale(x, Rat(n)))) return false;
  }
  return true;
}

SymTensor homogeneous_extend(const ConeFunction& fk, unsigned k) {
  const std::size_t n = fk.nvars();
  SymTensor out(k, n, fk.codim());
  const BlackBoxFn g = fk.as_black_box();
  const Vec origin = zero_vec(n);
  const Rat scale = Rat(1) / Rat(factorial(k));
  for (const auto& idx : sorted_index_tuples(n, k)) {
    std::vector<Vec> hs;
    hs.reserve(k);
    for (unsigned i : idx) hs.push_back(unit_vec(n, i));
    out.set(idx, vec_scale(mixed_diff_at(g, origin, hs), scale));
  }
  return out;
}

SymTensor homogeneous_extend(const ConeFunction& fk, unsigned k, const SamplerConfig& cfg) {
  cfg.validate();
  const std::size_t n = fk.nvars();
  const BlackBoxFn g = fk.as_black_box();
  const Vec origin = zero_vec(n);
  DiffReport report;
  report.seed = cfg.seed;
  std::vector<Witness> failures;
  std::string condition;
  RationalSampler sampler(cfg);
  for (std::size_t s = 0; s < cfg.samples && failures.empty(); ++s) {
    const Vec x = sampler.next_cone_vec(n);
    ++report.samples_used;
    Vec vanishing = pure_diff_at(g, origin, x, k + 1);
    if (!is_zero(vanishing)) {
      condition = "(i)";
      failures.push_back(Witness{condition, k + 1, {origin, x}, std::move(vanishing)});
      break;
    }
    const Vec base = fk(x);
    for (unsigned p = 1; p <= 3; ++p) {
      Vec gap = vec_sub(fk(vec_scale(x, Rat(p))), vec_scale(base, pow(Rat(p), k)));
      if (!is_zero(gap)) {
        condition = "(ii)";
        failures.push_back(Witness{condition, k, {x, Vec{Rat(p)}}, std::move(gap)});
        break;
      }
    }
  }
  if (!failures.empty()) {
    report.verdict = Verdict::fail;
    append_witnesses(report, std::move(failures));
    throw HypothesisViolation(condition, std::move(report));
  }

  SymTensor tensor = homogeneous_extend(fk, k);
  const VectorPoly poly = tensor_to_poly(tensor);
  RationalSampler check(cfg, 1);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Vec x = check.next_cone_vec(n);
    Vec gap = vec_sub(poly.evaluate(x), fk(x));
    if (!is_zero(gap)) {
      report.verdict = Verdict::fail;
      report.witnesses.push_back(Witness{"agreement", k, {x}, std::move(gap)});
      throw HypothesisViolation("agreement", std::move(report));
    }
  }
  return tensor;
}

Vec jordan_extended_form(const ConeFunction& fk, std::span<const Vec> args) {
  const auto split = std::find_if(args.begin(), args.end(), [](const Vec& v) { return !in_cone(v); });
  if (split == args.end()) {
    const std::vector<Vec> hs(args.begin(), args.end());
    const Vec value = mixed_diff_at(fk.as_black_box(), zero_vec(fk.nvars()), hs);
    return vec_scale(value, Rat(1) / Rat(factorial(static_cast<unsigned>(args.size()))));
  }
  const auto pos = static_cast<std::size_t>(split - args.begin());
  auto [plus, minus] = jordan_parts(*split);
  std::vector<Vec> with_plus(args.begin(), args.end());
  std::vector<Vec> with_minus(args.begin(), args.end());
  with_plus[pos] = std::move(plus);
  with_minus[pos] = std::move(minus);
  return vec_sub(jordan_extended_form(fk, with_plus), jordan_extended_form(fk, with_minus));
}

namespace {

ConeFunction component_function(const ConeFunction& f, unsigned m, unsigned k) {
  return ConeFunction(f.nvars(), f.codim(), [f, m, k](const Vec& x) { return cone_components(f, m, x)[k]; });
}

}  // namespace

ExtensionResult kantorovich_extend(const ConeFunction& f, unsigned m, const SamplerConfig& cfg,
                                   std::span<const Vec> extra_points) {
  const std::size_t n = f.nvars();
  DiffReport hypotheses = check_extension_hypotheses(f, m, cfg);
  if (!hypotheses.passed()) {
    const std::string condition = hypotheses.witnesses.front().condition;
    throw HypothesisViolation(condition, std::move(hypotheses));
  }

  // Spot checks on the extracted components at deterministic cone points:
  // Newton consistency and f_k(p x) = p^k f_k(x) for p = 2, 3.
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vec(n, i));
  probes.push_back(Vec(n, Rat(1)));
  for (const auto& x : probes) {
    std::optional<Witness> bad;
    try {
      const auto comps = cone_components(f, m, x);
      if (!newton_consistent(f, x, comps)) bad = Witness{"newton", m, {x}, comps.back()};
      for (unsigned p = 2; p <= 3 && !bad; ++p) {
        const auto scaled = cone_components(f, m, vec_scale(x, Rat(p)));
        for (unsigned k = 0; k <= m && !bad; ++k) {
          Vec gap = vec_sub(scaled[k], vec_scale(comps[k], pow(Rat(p), k)));
          if (!is_zero(gap)) bad = Witness{"homogeneity", k, {x, Vec{Rat(p)}}, std::move(gap)};
        }
      }
    } catch (const MissingSample&) {
      continue;
    }
    if (bad) {
      DiffReport report;
      report.seed = cfg.seed;
      report.verdict = Verdict::fail;
      const std::string condition = bad->condition;
      report.witnesses.push_back(std::move(*bad));
      throw HypothesisViolation(condition, std::move(report));
    }
  }

  ExtensionResult result{VectorPoly(n, f.codim()), {}, std::move(hypotheses), {}};
  for (unsigned k = 0; k <= m; ++k) {
    SymTensor a = homogeneous_extend(component_function(f, m, k), k);
    result.polynomial += tensor_to_poly(a);
    result.components.push_back(std::move(a));
  }

  DiffReport& agreement = result.agreement_report;
  agreement.seed = cfg.seed;
  std::vector<Witness> mismatches;
  auto agree_at = [&](const Vec& x) {
    Vec gap;
    try {
      gap = vec_sub(result.polynomial.evaluate(x), f(x));
    } catch (const MissingSample&) {
      return;
    }
    ++agreement.samples_used;
    if (!is_zero(gap)) mismatches.push_back(Witness{"agreement", 0, {x}, std::move(gap)});
  };
  RationalSampler fresh(cfg, 2);
  for (std::size_t s = 0; s < cfg.samples; ++s) agree_at(fresh.next_cone_vec(n));
  for (const auto& x : extra_points) agree_at(x);
  agreement.verdict = mismatches.empty() ? Verdict::probabilistic : Verdict::fail;
  append_witnesses(agreement, std::move(mismatches));
  if (!agreement.passed()) throw HypothesisViolation("agreement", agreement);
  return result;
}

ConeFunction tabulated_cone_function(std::size_t nvars, std::size_t codim,
                                     std::vector<std::pair<Vec, Vec>> samples) {
  using Table = std::map<Vec, Vec, bool (*)(const Vec&, const Vec&)>;
  auto table = std::make_shared<Table>([](const Vec& a, const Vec& b) { return vec_less(a, b); });
  for (auto& [x, value] : samples) {
    if (x.size() != nvars || value.size() != codim) throw std::invalid_argument("table entry has the wrong shape");
    if (!in_cone(x)) throw OutsideCone("table point outside the cone: " + to_string(x));
    const auto [it, inserted] = table->emplace(std::move(x), std::move(value));
    if (!inserted) throw std::invalid_argument("duplicate table point " + to_string(it->first));
  }
  return ConeFunction(nvars, codim, [table](const Vec& x) {
    const auto it = table->find(x);
    if (it == table->end()) throw MissingSample("table has no sample at " + to_string(x));
    return it->second;
  });
}

}  // namespace posdiff
