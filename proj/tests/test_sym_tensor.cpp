#include <doctest.h>

#include "oracles.hpp"
#include "posdiff/parser.hpp"
#include "posdiff/positivity.hpp"
#include "posdiff/sym_tensor.hpp"

using namespace posdiff;

namespace {
VectorPoly P(const std::string& s, std::size_t n = 0) {
  ParseOptions o;
  o.min_nvars = n;
  return parse(s, o);
}
}  // namespace

TEST_CASE("sorted index tuples") {
  CHECK(sorted_index_tuples(2, 2) == std::vector<IndexTuple>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(sorted_index_tuples(3, 0) == std::vector<IndexTuple>{{}});
  CHECK(sorted_index_tuples(3, 3).size() == 10);
}

TEST_CASE("tensor values are symmetric and sparse") {
  SymTensor a(2, 2, 1);
  a.set({1, 0}, {make_rat(1, 2)});
  CHECK(a.value({0, 1}) == Vec{make_rat(1, 2)});
  CHECK(a.value({0, 0}) == Vec{0});
  a.set({0, 1}, {0});
  CHECK(a.entries().empty());
}

TEST_CASE("tensor evaluation") {
  SymTensor a(2, 2, 1);
  a.set({0, 1}, {make_rat(1, 2)});
  const std::vector<Vec> args{parse_vec("3,1"), parse_vec("2,5")};
  CHECK(tensor_eval(a, args) == Vec{make_rat(17, 2)});
  const std::vector<Vec> with_zero{parse_vec("0,0"), parse_vec("2,5")};
  CHECK(tensor_eval(a, with_zero) == Vec{0});
  CHECK(tensor_to_poly(a) == P("x1*x2"));
  CHECK(tensor_to_poly(SymTensor(3, 2, 1)).is_zero());
  SymTensor d(2, 1, 1);
  d.set({0, 0}, {1});
  CHECK(tensor_to_poly(d) == P("x^2"));
}

TEST_CASE("polarization by sign sums") {
  const SymTensor a = polarize_signs(P("x1*x2"));
  CHECK(a.value({0, 1}) == Vec{make_rat(1, 2)});
  CHECK(a.value({0, 0}) == Vec{0});
  CHECK(polarize_signs(P("x^2")).value({0, 0}) == Vec{1});
  CHECK(polarize_signs(P("x1^2*x2")).value({0, 0, 1}) == Vec{make_rat(1, 3)});
  const SymTensor c = polarize_signs(counterexample_cubic());
  CHECK(c.value({0, 1, 2}) == Vec{-1});
  CHECK_THROWS_AS(polarize_signs(P("x^2 + x")), NotHomogeneous);
  CHECK_THROWS_AS(polarize_signs(P("x^2"), 3), NotHomogeneous);
  CHECK_THROWS(polarize_signs(VectorPoly(2, 1)));
}

TEST_CASE("vertex-sum polarization is base independent") {
  const SymTensor ref = polarize_signs(P("x1*x2"));
  CHECK(polarize_mo(P("x1*x2"), parse_vec("0,0")) == ref);
  CHECK(polarize_mo(P("x1*x2"), parse_vec("7,-3")) == ref);
  CHECK(polarize_mo(P("x^2"), parse_vec("1")).value({0, 0}) == Vec{1});
}

TEST_CASE("polarization agrees with the coefficient oracle") {
  oracle::Gen g(17);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const unsigned k = static_cast<unsigned>(g.integer(0, 4));
    const VectorPoly pk = g.poly(n, 2, k, 5, false, k);
    CHECK(polarize_signs(pk, k) == oracle::polarize_by_coefficients(pk, k));
    CHECK(polarize_mo(pk, k, g.vec(n)) == oracle::polarize_by_coefficients(pk, k));
    CHECK(tensor_to_poly(polarize_signs(pk, k)) == pk);
  }
}

TEST_CASE("multilinearity and symmetry of evaluation") {
  oracle::Gen g(29);
  for (int i = 0; i < 20; ++i) {
    const VectorPoly pk = g.poly(3, 1, 3, 6, false, 3);
    const SymTensor a = polarize_signs(pk, 3);
    std::vector<Vec> args{g.vec(3), g.vec(3), g.vec(3)};
    const Vec v = tensor_eval(a, args);
    std::swap(args[0], args[2]);
    CHECK(tensor_eval(a, args) == v);
    const Vec y = g.vec(3);
    const Rat c = g.rat();
    std::vector<Vec> combo = args, only_y = args;
    combo[1] = vec_add(vec_scale(args[1], c), y);
    only_y[1] = y;
    const Vec lhs = tensor_eval(a, combo);
    Vec rhs = vec_scale(tensor_eval(a, args), c);
    vec_axpy(rhs, 1, tensor_eval(a, only_y));
    CHECK(lhs == rhs);
    const std::vector<Vec> diag{y, y, y};
    CHECK(tensor_eval(a, diag) == pk.evaluate(y));
  }
}

TEST_CASE("powers of arguments") {
  const SymTensor sq = polarize_signs(P("x^2"));
  const std::vector<std::pair<Vec, unsigned>> h2{{parse_vec("5"), 2}};
  CHECK(tensor_apply_powers(sq, h2) == Vec{25});
  const SymTensor a = polarize_signs(P("x1^2*x2"));
  const std::vector<std::pair<Vec, unsigned>> pat{{unit_vec(2, 0), 2}, {unit_vec(2, 1), 1}};
  CHECK(tensor_apply_powers(a, pat) == Vec{make_rat(1, 3)});
  const std::vector<std::pair<Vec, unsigned>> full{{parse_vec("2,3"), 3}, {parse_vec("1,1"), 0}};
  CHECK(tensor_apply_powers(a, full) == P("x1^2*x2").evaluate(parse_vec("2,3")));
  const std::vector<std::pair<Vec, unsigned>> bad{{parse_vec("2,3"), 2}};
  CHECK_THROWS_AS(tensor_apply_powers(a, bad), std::invalid_argument);
}

TEST_CASE("sign on the cone") {
  CHECK(tensor_is_nonneg(polarize_signs(P("x1*x2"))).nonneg);
  CHECK(tensor_is_nonneg(SymTensor(2, 2, 1)).nonneg);
  const TensorSign s = tensor_is_nonneg(polarize_signs(counterexample_cubic()));
  CHECK_FALSE(s.nonneg);
  REQUIRE(s.witness);
  CHECK(*s.witness == IndexTuple{0, 1, 2});
  CHECK(s.value == Vec{-1});
}
