#include "posdiff/positivity.hpp"

#include <algorithm>

#include "posdiff/diffcalc.hpp"

namespace posdiff {

const ComponentVerdict* PositivityCertificate::failure() const {
  for (const auto& c : components) {
    if (!c.nonneg) return &c;
  }
  return nullptr;
}

PositivityCertificate is_positive(const VectorPoly& p) {
  PositivityCertificate cert;
  const auto parts = p.homogeneous_split();
  for (unsigned k = 0; k < parts.size(); ++k) {
    if (parts[k].is_zero()) continue;
    const TensorSign sign = tensor_is_nonneg(polarize_signs(parts[k], k));
    cert.components.push_back(ComponentVerdict{k, sign.nonneg, sign.witness, sign.value});
    cert.positive = cert.positive && sign.nonneg;
  }
  return cert;
}

namespace {

bool all_coefficients_nonneg(const VectorPoly& p) {
  return std::all_of(p.coords().begin(), p.coords().end(), [](const ScalarPoly& c) {
    return std::all_of(c.terms().begin(), c.terms().end(), [](const auto& t) { return sgn(t.second) >= 0; });
  });
}

Verdict combine(const std::vector<OrderVerdict>& orders) {
  bool all_certified = true;
  for (const auto& o : orders) {
    if (o.verdict == Verdict::fail) return Verdict::fail;
    all_certified = all_certified && o.verdict == Verdict::certified;
  }
  return all_certified ? Verdict::certified : Verdict::probabilistic;
}

std::vector<Vec> basis_increments(std::size_t n, const IndexTuple& idx) {
  std::vector<Vec> hs;
  hs.reserve(idx.size());
  for (unsigned i : idx) hs.push_back(unit_vec(n, i));
  return hs;
}

}  // namespace

DiffReport mixed_diff_nonneg_sample(const VectorPoly& p, unsigned r_max, const SamplerConfig& cfg) {
  cfg.validate();
  const BlackBoxFn f = BlackBoxFn::from_poly(p);
  const std::size_t n = p.nvars();
  DiffReport report;
  report.seed = cfg.seed;
  std::vector<bool> failed(r_max + 1, false);

  auto check = [&](std::vector<Witness>& sink, const Vec& x, const std::vector<Vec>& hs) {
    Vec value = mixed_diff_at(f, x, hs);
    ++report.samples_used;
    if (is_nonneg(value)) return;
    const auto r = static_cast<unsigned>(hs.size());
    failed[r] = true;
    std::vector<Vec> points{x};
    points.insert(points.end(), hs.begin(), hs.end());
    sink.push_back(Witness{"mixed", r, std::move(points), std::move(value)});
  };

  std::vector<Witness> probe_failures;
  const Vec origin = zero_vec(n);
  for (unsigned r = 0; r <= r_max; ++r) {
    const auto tuples = sorted_index_tuples(n, r);
    const std::size_t limit = std::min(tuples.size(), cfg.grid_cap);
    for (std::size_t i = 0; i < limit; ++i) check(probe_failures, origin, basis_increments(n, tuples[i]));
  }

  std::vector<Witness> random_failures;
  RationalSampler sampler(cfg);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Vec x = sampler.next_cone_vec(n);
    for (unsigned r = 0; r <= r_max; ++r) {
      std::vector<Vec> hs;
      for (unsigned j = 0; j < r; ++j) hs.push_back(sampler.next_cone_vec(n));
      check(random_failures, x, hs);
    }
  }

  for (unsigned r = 0; r <= r_max; ++r) {
    report.per_order.push_back({r, failed[r] ? Verdict::fail : Verdict::probabilistic});
  }
  report.verdict = combine(report.per_order);
  append_witnesses(report, std::move(probe_failures));
  append_witnesses(report, std::move(random_failures));
  return report;
}

DiffReport pure_diff_nonneg_check(const VectorPoly& p, unsigned r_max, const SamplerConfig& cfg) {
  cfg.validate();
  const BlackBoxFn f = BlackBoxFn::from_poly(p);
  const std::size_t n = p.nvars();
  DiffReport report;
  report.seed = cfg.seed;

  std::vector<unsigned> open_orders;
  for (unsigned r = 0; r <= r_max; ++r) {
    if (all_coefficients_nonneg(symbolic_pure_diff(p, r))) {
      report.per_order.push_back({r, Verdict::certified});
    } else {
      report.per_order.push_back({r, Verdict::probabilistic});
      open_orders.push_back(r);
    }
  }

  std::vector<Witness> probe_failures;
  std::vector<Witness> sampled_failures;
  auto check = [&](std::vector<Witness>& sink, unsigned r, const Vec& x, const Vec& h) {
    Vec value = pure_diff_at(f, x, h, r);
    ++report.samples_used;
    if (is_nonneg(value)) return;
    report.per_order[r].verdict = Verdict::fail;
    std::vector<Vec> points{x};
    if (r > 0) points.push_back(h);
    sink.push_back(Witness{"pure", r, std::move(points), std::move(value)});
  };

  if (!open_orders.empty()) {
    const Vec origin = zero_vec(n);
    std::vector<Vec> probe_steps;
    for (std::size_t i = 0; i < n; ++i) probe_steps.push_back(unit_vec(n, i));
    probe_steps.push_back(Vec(n, Rat(1)));
    for (unsigned r : open_orders) {
      if (r == 0) {
        check(probe_failures, 0, origin, origin);
        continue;
      }
      for (const auto& h : probe_steps) check(probe_failures, r, origin, h);
    }

    for (unsigned r : open_orders) {
      // Order 0 does not depend on h, so its grid covers x alone.
      const ConeGrid grid = default_cone_grid(r == 0 ? n : 2 * n, cfg.grid_cap);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const Vec pt = grid.point(i);
        const Vec x(pt.begin(), pt.begin() + n);
        const Vec h = r == 0 ? zero_vec(n) : Vec(pt.begin() + n, pt.end());
        check(sampled_failures, r, x, h);
      }
    }

    RationalSampler sampler(cfg);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      const Vec x = sampler.next_cone_vec(n);
      const Vec h = sampler.next_cone_vec(n);
      for (unsigned r : open_orders) check(sampled_failures, r, x, r == 0 ? zero_vec(n) : h);
    }
  }

  report.verdict = combine(report.per_order);
  append_witnesses(report, std::move(probe_failures));
  append_witnesses(report, std::move(sampled_failures));
  return report;
}

DiffReport affine_line_sample(const VectorPoly& p, const SamplerConfig& cfg) {
  cfg.validate();
  const std::size_t n = p.nvars();
  DiffReport report;
  report.seed = cfg.seed;
  RationalSampler sampler(cfg);
  const ScalarPoly t = ScalarPoly::variable(1, 0);
  std::vector<Witness> failures;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Vec x = sampler.next_cone_vec(n);
    const Vec h = sampler.next_cone_vec(n);
    std::vector<ScalarPoly> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(ScalarPoly::constant(1, x[i]) + t * h[i]);
    const VectorPoly line = p.compose(args);
    ++report.samples_used;
    for (std::size_t c = 0; c < line.codim(); ++c) {
      for (const auto& [e, coef] : line[c].terms()) {
        if (sgn(coef) >= 0) continue;
        // Report the offending power of t and its coefficient.
        Vec value = zero_vec(line.codim());
        value[c] = coef;
        failures.push_back(Witness{"line", e.front(), {x, h}, std::move(value)});
      }
    }
  }
  report.verdict = failures.empty() ? Verdict::probabilistic : Verdict::fail;
  append_witnesses(report, std::move(failures));
  return report;
}

VectorPoly counterexample_cubic() {
  ScalarPoly p(3);
  auto term = [&p](unsigned a, unsigned b, unsigned c, long coef) { p.add_term({a, b, c}, coef); };
  term(3, 0, 0, 1);
  term(0, 3, 0, 1);
  term(0, 0, 3, 1);
  // 3 x1^2 (x2 + x3) + 3 x2^2 (x1 + x3) + 3 x3^2 (x1 + x2)
  term(2, 1, 0, 3);
  term(2, 0, 1, 3);
  term(1, 2, 0, 3);
  term(0, 2, 1, 3);
  term(1, 0, 2, 3);
  term(0, 1, 2, 3);
  term(1, 1, 1, -6);
  return VectorPoly::scalar(std::move(p));
}

bool CounterexampleSuite::consistent() const {
  const ComponentVerdict* bad = positivity.failure();
  return mixed_coefficient == -6 && !positivity.positive && bad != nullptr && bad->degree == 3 &&
         bad->witness == IndexTuple{0, 1, 2} && bad->value == Vec{Rat(-1)} &&
         top_mixed_difference == Vec{Rat(-6)} && value_111 == Vec{Rat(15)} && value_110 == Vec{Rat(8)} &&
         mixed_report.verdict == Verdict::fail && pure_report.passed() && line_report.passed();
}

CounterexampleSuite run_counterexample_suite(const SamplerConfig& cfg) {
  VectorPoly cubic = counterexample_cubic();
  const BlackBoxFn f = BlackBoxFn::from_poly(cubic);
  const Vec origin = zero_vec(3);
  const std::vector<Vec> basis{unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)};
  CounterexampleSuite suite{
      cubic,
      cubic[0].coefficient({1, 1, 1}),
      is_positive(cubic),
      mixed_diff_at(f, origin, basis),
      cubic.evaluate(Vec{Rat(1), Rat(1), Rat(1)}),
      cubic.evaluate(Vec{Rat(1), Rat(1), Rat(0)}),
      mixed_diff_nonneg_sample(cubic, 3, cfg),
      pure_diff_nonneg_check(cubic, 3, cfg),
      affine_line_sample(cubic, cfg),
  };
  return suite;
}

}  // namespace posdiff
