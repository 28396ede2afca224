#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "natop/hochschild.hpp"
#include "natop/interval.hpp"
#include "natop/operad.hpp"

using namespace natop;

TEST_CASE("monomials and elements") {
  CHECK(mono_concat({1, 2}, {}) == Monomial{1, 2});
  AlgebraElement e;
  e.add({1, 2}, 3);
  CHECK(e.coefficient({1, 2}) == 3);
  CHECK(e.coefficient({2, 1}) == 0);
  AlgebraElement f = e;
  f.add_scaled(e, 1);
  CHECK(f.coefficient({1, 2}) == 6);  // linearity of the coefficient
  CHECK(multiply(AlgebraElement::generator(1), AlgebraElement::generator(2)) ==
        AlgebraElement::monomial({1, 2}));
}

TEST_CASE("evaluation of basic trees") {
  // bare leg is the identity operation
  CHECK(evaluate(leg(1), TreeType{1, {}}, {}, {AlgebraElement::generator(7)}) ==
        AlgebraElement::generator(7));
  // bare special is the unit
  CHECK(evaluate(special(), TreeType{0, {}}, {}, {}) == AlgebraElement::unit());
  // cup evaluates to the product of values
  SymbolicCochain f, g;
  f.arity = 1;
  g.arity = 1;
  f.table[{Monomial{1}}] = AlgebraElement::generator(10);
  g.table[{Monomial{2}}] = AlgebraElement::generator(11);
  AlgebraElement v = evaluate(cup_generator(1, 1), TreeType{2, {1, 1}}, {f, g},
                              generator_args(2));
  CHECK(v == AlgebraElement::monomial({10, 11}));
}

TEST_CASE("witness construction basics") {
  // single white vertex
  TreeType ty{2, {2}};
  Tree t = white(1, {leg(1), leg(2)});
  SeparatingWitness w = build_separating_witness(t, ty);
  CHECK(w.value_of == std::vector<int>{3});
  CHECK(w.target == Monomial{3});
  CHECK(evaluate(t, ty, w.fs, generator_args(2)).coefficient(w.target) == 1);
  // stub input goes through the unit
  TreeType ty2{0, {1}};
  Tree t2 = white(1, {special()});
  SeparatingWitness w2 = build_separating_witness(t2, ty2);
  CHECK(w2.target == Monomial{1});
  CHECK(w2.fs[0].table.count({Monomial{}}) == 1);
}

TEST_CASE("genericity on tiny types") {
  CHECK(genericity_check(TreeType{0, {2}}));
  CHECK(genericity_check(TreeType{1, {1}}));
  CHECK(genericity_check(TreeType{2, {1, 1}}));
}

TEST_CASE("bar action") {
  // identity morphism acts as the identity
  std::vector<AlgebraElement> tensor;
  for (int i = 1; i <= 4; ++i) tensor.push_back(AlgebraElement::generator(i));
  auto out = bar_action(IntervalMorphism::identity(1), tensor);
  CHECK(out == tensor);
  // swapped fiber order multiplies in swapped order
  IntervalMorphism f(1, 0, {-1, 0, 0, 1}, {{-1}, {1, 0}, {2}});
  auto out2 = bar_action(f, tensor);
  CHECK(out2[1] == AlgebraElement::monomial({3, 2}));
  CHECK_THROWS(bar_action(f, {tensor[0]}));
}

TEST_CASE("hochschild coboundary formula") {
  // arity-1 table f(x1) = x5: (df)(x1,x2) = x1 f(x2) - f(x1 x2) + f(x1) x2
  SymbolicCochain f;
  f.arity = 1;
  f.table[{Monomial{1}}] = AlgebraElement::generator(5);
  MultilinearFn fn = [&](const std::vector<Monomial>& v) { return f(v); };
  AlgebraElement d = hochschild_coboundary(fn, 1, {Monomial{1}, Monomial{2}});
  // f(x2) = 0 and f(x1x2) = 0, so only f(x1)*x2 survives
  CHECK(d == AlgebraElement::monomial({5, 2}));
  AlgebraElement d2 = hochschild_coboundary(fn, 1, {Monomial{2}, Monomial{1}});
  // x2 f(x1) survives with sign +1
  CHECK(d2 == AlgebraElement::monomial({2, 5}));
}
