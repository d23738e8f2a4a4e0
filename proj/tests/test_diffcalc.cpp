#include <doctest.h>

#include "oracles.hpp"
#include "posdiff/combinatorics.hpp"
#include "posdiff/diffcalc.hpp"
#include "posdiff/parser.hpp"
#include "posdiff/positivity.hpp"

using namespace posdiff;

namespace {
VectorPoly P(const std::string& s, std::size_t n = 0) {
  ParseOptions o;
  o.min_nvars = n;
  return parse(s, o);
}

VectorPoly P_named(const std::string& s, std::vector<std::string> names) {
  ParseOptions o;
  o.vars = std::move(names);
  return parse(s, o);
}

// Non-polynomial map on Q^2: coordinatewise |x| plus a step.
BlackBoxFn rough() {
  return BlackBoxFn(2, 2, [](const Vec& x) {
    Vec out{abs(x[0]) + abs(x[1]), x[0] * x[1] > 0 ? Rat(1) : Rat(-3, 2)};
    return out;
  });
}
}  // namespace

TEST_CASE("black box dimension checks") {
  const BlackBoxFn f = BlackBoxFn::from_poly(P("x1*x2"));
  CHECK(f.polynomial() != nullptr);
  CHECK(rough().polynomial() == nullptr);
  CHECK_THROWS_AS(f(parse_vec("1")), std::invalid_argument);
  const BlackBoxFn bad(1, 2, [](const Vec&) { return Vec{1}; });
  CHECK_THROWS_AS(bad(parse_vec("1")), std::logic_error);
}

TEST_CASE("mixed differences") {
  const BlackBoxFn sq = BlackBoxFn::from_poly(P("x^2"));
  oracle::Gen g(1);
  for (int i = 0; i < 10; ++i) {
    const std::vector<Vec> hs{g.vec(1), g.vec(1)};
    CHECK(mixed_diff_at(sq, g.vec(1), hs) == Vec{2 * hs[0][0] * hs[1][0]});
  }
  const BlackBoxFn c = BlackBoxFn::from_poly(P("7", 2));
  const std::vector<Vec> one{parse_vec("1,2")};
  CHECK(mixed_diff_at(c, parse_vec("3,4"), one) == Vec{0});
  const BlackBoxFn cubic = BlackBoxFn::from_poly(counterexample_cubic());
  const std::vector<Vec> basis{unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)};
  CHECK(mixed_diff_at(cubic, zero_vec(3), basis) == Vec{-6});
  CHECK(mixed_diff_at(cubic, parse_vec("1,2,3"), std::span<const Vec>{}) == cubic(parse_vec("1,2,3")));
}

TEST_CASE("vertex sum, recursion and the direct oracle agree") {
  oracle::Gen g(2);
  for (int i = 0; i < 40; ++i) {
    const VectorPoly p = g.poly(2, 2, 4, 6);
    const BlackBoxFn f = BlackBoxFn::from_poly(p);
    const unsigned r = static_cast<unsigned>(g.integer(0, 4));
    std::vector<Vec> hs;
    for (unsigned s = 0; s < r; ++s) hs.push_back(g.vec(2));
    const Vec x = g.vec(2);
    const Vec expect = oracle::vertex_sum(p, x, hs);
    CHECK(mixed_diff_at(f, x, hs) == expect);
    CHECK(mixed_diff_recursive(f, x, hs) == expect);
    CHECK(mixed_diff_recursive(rough(), x, hs) == mixed_diff_at(rough(), x, hs));
  }
}

TEST_CASE("pure differences") {
  const BlackBoxFn cube = BlackBoxFn::from_poly(P("x^3"));
  CHECK(pure_diff_at(cube, parse_vec("0"), parse_vec("1"), 2) == Vec{6});
  CHECK(pure_diff_at(cube, parse_vec("5"), parse_vec("2"), 0) == Vec{125});
  const BlackBoxFn sq = BlackBoxFn::from_poly(P("x^2"));
  CHECK(pure_diff_at(sq, parse_vec("0"), parse_vec("1"), 3) == Vec{0});
  oracle::Gen g(3);
  for (int i = 0; i < 20; ++i) {
    const VectorPoly p = g.poly(2, 1, 4, 5);
    const Vec x = g.vec(2), h = g.vec(2);
    const unsigned r = static_cast<unsigned>(g.integer(1, 5));
    const std::vector<Vec> hs(r, h);
    CHECK(pure_diff_at(BlackBoxFn::from_poly(p), x, h, r) == oracle::vertex_sum(p, x, hs));
  }
}

TEST_CASE("newton expansion reconstructs f(x + r h)") {
  const BlackBoxFn sq = BlackBoxFn::from_poly(P("x^2"));
  oracle::Gen g(4);
  for (int i = 0; i < 10; ++i) {
    const Vec x = g.vec(1), h = g.vec(1);
    const Rat v = x[0] + 3 * h[0];
    CHECK(newton_expand(sq, x, h, 3) == Vec{v * v});
    CHECK(newton_expand(sq, x, h, 0) == sq(x));
  }
  for (int i = 0; i < 20; ++i) {
    const Vec x = g.vec(2), h = g.vec(2);
    const unsigned r = static_cast<unsigned>(g.integer(0, 6));
    Vec target = x;
    vec_axpy(target, Rat(r), h);
    CHECK(newton_expand(rough(), x, h, r) == rough()(target));
  }
}

TEST_CASE("mixed differences from pure ones") {
  const BlackBoxFn sq = BlackBoxFn::from_poly(P("x^2"));
  const std::vector<Vec> hs{parse_vec("3"), parse_vec("-5/2")};
  CHECK(mixed_from_pure(sq, parse_vec("7"), hs) == Vec{-15});
  const std::vector<Vec> one{parse_vec("2")};
  CHECK(mixed_from_pure(sq, parse_vec("1"), one) == mixed_diff_at(sq, parse_vec("1"), one));
  oracle::Gen g(5);
  for (int i = 0; i < 20; ++i) {
    const BlackBoxFn f = BlackBoxFn::from_poly(g.poly_of_degree(2, 1, 3, 5));
    const std::vector<Vec> h3{g.vec(2), g.vec(2), g.vec(2)};
    const Vec x = g.vec(2);
    CHECK(mixed_from_pure(f, x, h3) == mixed_diff_at(f, x, h3));
  }
}

TEST_CASE("symbolic differences") {
  CHECK(symbolic_mixed_diff(P("x^2"), 2) == P("2*x2*x3", 3));
  CHECK(symbolic_mixed_diff(P("x1*x2"), 1) ==
        P_named("x1*h2 + x2*h1 + h1*h2", {"x1", "x2", "h1", "h2"}));
  CHECK(symbolic_pure_diff(P("x^3"), 2) == P_named("6*x*h^2 + 6*h^3", {"x", "h"}));
  CHECK(symbolic_pure_diff(P("5", 1), 1).is_zero());
  CHECK(symbolic_pure_diff(P("x^2"), 2) == P_named("2*h^2", {"x", "h"}));
  oracle::Gen g(6);
  for (int i = 0; i < 15; ++i) {
    const unsigned m = static_cast<unsigned>(g.integer(0, 4));
    const VectorPoly p = g.poly(2, 2, m, 5);
    CHECK(symbolic_mixed_diff(p, m + 1).is_zero());
    CHECK(symbolic_pure_diff(p, m + 1).is_zero());
    const unsigned r = static_cast<unsigned>(g.integer(0, 3));
    const VectorPoly d = symbolic_mixed_diff(p, r);
    Vec pt = g.vec(2);
    std::vector<Vec> hs;
    for (unsigned s = 0; s < r; ++s) {
      hs.push_back(g.vec(2));
      pt.insert(pt.end(), hs.back().begin(), hs.back().end());
    }
    CHECK(d.evaluate(pt) == oracle::vertex_sum(p, Vec(pt.begin(), pt.begin() + 2), hs));
  }
  CHECK(difference_variable_names(2, 2) ==
        std::vector<std::string>{"x1", "x2", "h1_1", "h1_2", "h2_1", "h2_2"});
}

TEST_CASE("closed forms for homogeneous polynomials") {
  const SymTensor a = polarize_signs(P("x1*x2"));
  oracle::Gen g(8);
  const std::vector<Vec> hs{g.vec(2), g.vec(2)};
  CHECK(homog_mixed_diff_closed(a, g.vec(2), hs) == vec_scale(tensor_eval(a, hs), 2));
  const std::vector<Vec> h3{g.vec(2), g.vec(2), g.vec(2)};
  CHECK(homog_mixed_diff_closed(a, g.vec(2), h3) == Vec{0});
  const SymTensor cube = polarize_signs(P("x^3"));
  CHECK(homog_pure_diff_closed(cube, parse_vec("0"), parse_vec("1"), 2) == Vec{6});
  CHECK(homog_pure_diff_closed(cube, parse_vec("4"), parse_vec("1"), 4) == Vec{0});
  for (int i = 0; i < 30; ++i) {
    const unsigned k = static_cast<unsigned>(g.integer(0, 4));
    const VectorPoly pk = g.poly(2, 2, k, 4, false, k);
    const SymTensor t = polarize_signs(pk, k);
    const BlackBoxFn f = BlackBoxFn::from_poly(pk);
    const unsigned r = static_cast<unsigned>(g.integer(0, 5));
    std::vector<Vec> hs_r;
    for (unsigned s = 0; s < r; ++s) hs_r.push_back(g.vec(2));
    const Vec x = g.vec(2), h = g.vec(2);
    CHECK(homog_mixed_diff_closed(t, x, hs_r) == mixed_diff_at(f, x, hs_r));
    CHECK(homog_pure_diff_closed(t, x, h, r) == pure_diff_at(f, x, h, r));
    if (r <= k) {
      // At x = 0 the pure difference is r! S(k, r) P_k(h).
      const Rat scale = Rat(oracle::fact(r) * oracle::set_partitions(k, r));
      CHECK(pure_diff_at(f, zero_vec(2), h, r) == vec_scale(pk.evaluate(h), scale));
    }
  }
}
