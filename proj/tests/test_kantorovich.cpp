#include <doctest.h>

#include "oracles.hpp"
#include "posdiff/kantorovich.hpp"
#include "posdiff/parser.hpp"
#include "posdiff/positivity.hpp"

using namespace posdiff;

namespace {
VectorPoly P(const std::string& s, std::size_t n = 0) {
  ParseOptions o;
  o.min_nvars = n;
  return parse(s, o);
}

std::string condition_of(const ConeFunction& f, unsigned m) {
  try {
    kantorovich_extend(f, m, SamplerConfig{});
  } catch (const HypothesisViolation& e) {
    return e.condition;
  }
  return "";
}
}  // namespace

TEST_CASE("jordan parts") {
  const auto [pos, neg] = jordan_parts(parse_vec("3,-2"));
  CHECK(pos == parse_vec("3,0"));
  CHECK(neg == parse_vec("0,2"));
  CHECK(jordan_parts(parse_vec("1,0")).second == parse_vec("0,0"));
  CHECK(in_cone(parse_vec("0,1/2")));
  CHECK_FALSE(in_cone(parse_vec("0,-1/2")));
}

TEST_CASE("cone functions refuse points off the cone") {
  const ConeFunction f = ConeFunction::restriction(P("x1*x2"));
  CHECK(f(parse_vec("2,3")) == Vec{6});
  CHECK_THROWS_AS(f(parse_vec("-1,3")), OutsideCone);
  CHECK_THROWS_AS(f.as_black_box()(parse_vec("-1,3")), OutsideCone);
}

TEST_CASE("extension hypotheses") {
  const SamplerConfig cfg;
  CHECK(check_extension_hypotheses(ConeFunction::restriction(P("x1*x2")), 2, cfg).passed());
  const DiffReport sq = check_extension_hypotheses(ConeFunction::restriction(P("(x1-x2)^2")), 2, cfg);
  CHECK(sq.verdict == Verdict::fail);
  const Witness& w = sq.witnesses.front();
  CHECK(w.condition == "(ii)");
  CHECK(w.points == std::vector<Vec>{zero_vec(2), unit_vec(2, 0), unit_vec(2, 1)});
  CHECK(w.value == Vec{-2});
  const DiffReport cube = check_extension_hypotheses(ConeFunction::restriction(P("x^3")), 2, cfg);
  CHECK(cube.verdict == Verdict::fail);
  CHECK(cube.witnesses.front().condition == "(i)");
  CHECK(cube.witnesses.front().value == Vec{6});
}

TEST_CASE("cone components") {
  const ConeFunction f = ConeFunction::restriction(P("x1*x2 + x1"));
  const auto comps = cone_components(f, 2, parse_vec("1,1"));
  CHECK(comps == std::vector<Vec>{{0}, {1}, {1}});
  CHECK(newton_consistent(f, parse_vec("1,1"), comps));
  CHECK(cone_components(ConeFunction::restriction(P("4", 2)), 2, parse_vec("3,5")) ==
        std::vector<Vec>{{4}, {0}, {0}});
  CHECK(cone_components(ConeFunction::restriction(counterexample_cubic()), 3, parse_vec("1,1,1")) ==
        std::vector<Vec>{{0}, {0}, {0}, {15}});
  CHECK_THROWS_AS(cone_components(f, 2, parse_vec("-1,1")), OutsideCone);
}

TEST_CASE("homogeneous extension") {
  const SymTensor lin = homogeneous_extend(ConeFunction::restriction(P("x1")), 1);
  CHECK(lin.value({0}) == Vec{1});
  const SymTensor bil = homogeneous_extend(ConeFunction::restriction(P("x1*x2")), 2);
  CHECK(bil.value({0, 1}) == Vec{make_rat(1, 2)});
  CHECK(bil.value({0, 0}) == Vec{0});
  const SymTensor c = homogeneous_extend(ConeFunction::restriction(P("7", 2)), 0);
  CHECK(c.value({}) == Vec{7});
  const SamplerConfig cfg;
  CHECK(homogeneous_extend(ConeFunction::restriction(P("x1*x2")), 2, cfg) == bil);
  CHECK_THROWS_AS(homogeneous_extend(ConeFunction::restriction(P("x1*x2 + x1")), 2, cfg), HypothesisViolation);
}

TEST_CASE("jordan extension agrees with multilinear evaluation") {
  oracle::Gen g(1);
  for (int i = 0; i < 20; ++i) {
    const unsigned k = static_cast<unsigned>(g.integer(1, 3));
    const VectorPoly pk = g.poly(2, 2, k, 4, true, k);
    const ConeFunction fk = ConeFunction::restriction(pk);
    const SymTensor a = homogeneous_extend(fk, k);
    std::vector<Vec> args;
    for (unsigned s = 0; s < k; ++s) args.push_back(g.vec(2));
    CHECK(jordan_extended_form(fk, args) == tensor_eval(a, args));
  }
}

TEST_CASE("extension round trip") {
  const SamplerConfig cfg;
  CHECK(kantorovich_extend(ConeFunction::restriction(P("x1*x2")), 2, cfg).polynomial == P("x1*x2"));
  const VectorPoly q = P("2 + 3*x1 + x1^2*x2^2");
  const ExtensionResult r = kantorovich_extend(ConeFunction::restriction(q), 4, cfg);
  CHECK(r.polynomial == q);
  CHECK(r.components.size() == 5);
  CHECK(r.agreement_report.passed());
  oracle::Gen g(2);
  for (int i = 0; i < 10; ++i) {
    const VectorPoly p = g.poly(2, 2, 3, 5, true);
    const ExtensionResult e = kantorovich_extend(ConeFunction::restriction(p), 3, cfg);
    CHECK(e.polynomial == p);
    CHECK(is_positive(e.polynomial).positive);
  }
}

TEST_CASE("extension rejects functions that violate the hypotheses") {
  CHECK(condition_of(ConeFunction::restriction(P("(x1-x2)^2")), 2) == "(ii)");
  CHECK(condition_of(ConeFunction::restriction(P("x^3")), 2) == "(i)");
  CHECK(condition_of(ConeFunction::restriction(P("x - 1")), 1) == "range");
  try {
    kantorovich_extend(ConeFunction::restriction(P("(x1-x2)^2")), 2, SamplerConfig{});
    FAIL("expected a violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.report.witnesses.front().value == Vec{-2});
  }
}

TEST_CASE("extension from a finite table") {
  // Cone samples of x1^2 + x1*x2 + 3 on the integer grid {0..6}^2.
  const VectorPoly p = P("x1^2 + x1*x2 + 3");
  std::vector<std::pair<Vec, Vec>> table;
  std::vector<Vec> points;
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b) {
      const Vec x{Rat(a), Rat(b)};
      table.emplace_back(x, p.evaluate(x));
      points.push_back(x);
    }
  const ConeFunction f = tabulated_cone_function(2, 1, table);
  CHECK_THROWS_AS(f(parse_vec("1/2,0")), MissingSample);
  const ExtensionResult e = kantorovich_extend(f, 2, SamplerConfig{}, points);
  CHECK(e.polynomial == p);
  CHECK(e.agreement_report.samples_used >= points.size());
}
