#include <doctest.h>

#include "oracles.hpp"
#include "posdiff/components.hpp"
#include "posdiff/parser.hpp"
#include "posdiff/positivity.hpp"

using namespace posdiff;

namespace {
VectorPoly P(const std::string& s, std::size_t n = 0) {
  ParseOptions o;
  o.min_nvars = n;
  return parse(s, o);
}

std::vector<Vec> split_at(const VectorPoly& p, unsigned m, const Vec& x) {
  std::vector<Vec> out;
  for (const auto& q : oracle::split_by_degree(p, m)) out.push_back(q.evaluate(x));
  return out;
}
}  // namespace

TEST_CASE("vandermonde inverse") {
  const AlphaMatrix a1 = vandermonde_inverse(1);
  CHECK(a1.rows() == std::vector<std::vector<Rat>>{{1, 0}, {-1, 1}});
  const AlphaMatrix a2 = vandermonde_inverse(2);
  CHECK(a2.rows()[1] == std::vector<Rat>{make_rat(-3, 2), 2, make_rat(-1, 2)});
  for (unsigned m = 0; m <= 8; ++m) CHECK(oracle::alpha_times_vandermonde_is_identity(vandermonde_inverse(m), m));
}

TEST_CASE("interpolation extraction") {
  const BlackBoxFn sq = BlackBoxFn::from_poly(P("x^2"));
  CHECK(components_by_interpolation(sq, 2, parse_vec("1")) == std::vector<Vec>{{0}, {0}, {1}});
  const BlackBoxFn c = BlackBoxFn::from_poly(P("5", 2));
  CHECK(components_by_interpolation(c, 3, parse_vec("2,7")) == std::vector<Vec>{{5}, {0}, {0}, {0}});
  const BlackBoxFn cubic = BlackBoxFn::from_poly(counterexample_cubic());
  CHECK(components_by_interpolation(cubic, 3, parse_vec("1,1,1")) == std::vector<Vec>{{0}, {0}, {0}, {15}});
}

TEST_CASE("stirling extraction") {
  const BlackBoxFn sq = BlackBoxFn::from_poly(P("x^2"));
  oracle::Gen g(1);
  for (int i = 0; i < 5; ++i) {
    const Vec x = g.vec(1);
    CHECK(components_by_stirling(sq, 2, x) == std::vector<Vec>{{0}, {0}, {x[0] * x[0]}});
  }
  for (int i = 0; i < 30; ++i) {
    const unsigned m = static_cast<unsigned>(g.integer(0, 5));
    const VectorPoly p = g.poly(2, 2, m, 6);
    const BlackBoxFn f = BlackBoxFn::from_poly(p);
    const Vec x = g.vec(2);
    const auto expect = split_at(p, m, x);
    CHECK(components_by_stirling(f, m, x) == expect);
    CHECK(components_by_interpolation(f, m, x) == expect);
  }
}

TEST_CASE("scaling extraction") {
  CHECK(component_by_scaling(P("x^2 + x"), 1) == P("x"));
  CHECK(component_by_scaling(P("x^2 + x"), 2) == P("x^2"));
  CHECK(component_by_scaling(P("x^2 + x"), 4).is_zero());
  oracle::Gen g(2);
  for (int i = 0; i < 15; ++i) {
    const VectorPoly p = g.poly(2, 2, 5, 7);
    const auto split = oracle::split_by_degree(p, 5);
    for (unsigned k = 0; k <= 5; ++k) CHECK(component_by_scaling(p, k) == split[k]);
  }
}

TEST_CASE("tensor by scaling") {
  CHECK(tensor_by_scaling(P("x1*x2 + x1"), 2) == polarize_signs(P("x1*x2")));
  CHECK(tensor_by_scaling(P("x1*x2 + x1"), 3).entries().empty());
  CHECK(tensor_by_scaling(counterexample_cubic(), 3).value({0, 1, 2}) == Vec{-1});
  CHECK_THROWS(tensor_by_scaling(P("x"), 0));
  oracle::Gen g(3);
  for (int i = 0; i < 10; ++i) {
    const VectorPoly p = g.poly(3, 1, 4, 6);
    const unsigned k = static_cast<unsigned>(g.integer(1, 4));
    CHECK(tensor_by_scaling(p, k) == oracle::polarize_by_coefficients(p.homogeneous_part(k), k));
  }
}

TEST_CASE("degree test") {
  const SamplerConfig cfg;
  const BlackBoxFn cube = BlackBoxFn::from_poly(P("x^3"));
  const DiffReport bad = degree_test(cube, 2, cfg);
  CHECK(bad.verdict == Verdict::fail);
  REQUIRE_FALSE(bad.witnesses.empty());
  const Witness& w = bad.witnesses.front();
  CHECK(w.order == 3);
  REQUIRE(w.points.size() == 2);
  CHECK(w.value == Vec{6 * pow(w.points[1][0], 3)});
  CHECK(degree_test(cube, 3, cfg).verdict == Verdict::certified);

  const BlackBoxFn absval(1, 1, [](const Vec& x) { return Vec{abs(x[0])}; });
  const DiffReport r = degree_test(absval, 1, cfg);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE_FALSE(r.witnesses.empty());
  for (const auto& wit : r.witnesses) {
    const Vec& x = wit.points[0];
    const Vec& h = wit.points[1];
    CHECK(x[0] < 0);
    CHECK(x[0] + 2 * h[0] > 0);
  }
  const BlackBoxFn opaque_sq(1, 1, [](const Vec& x) { return Vec{x[0] * x[0]}; });
  CHECK(degree_test(opaque_sq, 2, cfg).verdict == Verdict::probabilistic);
}

TEST_CASE("least degree search") {
  const SamplerConfig cfg;
  oracle::Gen g(4);
  for (int i = 0; i < 15; ++i) {
    const unsigned d = static_cast<unsigned>(g.integer(0, 4));
    const VectorPoly p = g.poly_of_degree(2, 1, d, 5);
    CHECK(least_degree(BlackBoxFn::from_poly(p), kDefaultDegreeCap, cfg).degree == d);
    const BlackBoxFn opaque(2, 1, [p](const Vec& x) { return p.evaluate(x); });
    CHECK(least_degree(opaque, kDefaultDegreeCap, cfg).degree == d);
  }
  const BlackBoxFn absval(1, 1, [](const Vec& x) { return Vec{abs(x[0])}; });
  const DegreeSearch none = least_degree(absval, 3, cfg);
  CHECK_FALSE(none.degree.has_value());
  CHECK(none.report.verdict == Verdict::fail);
}
