#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "natop/hochschild.hpp"
#include "natop/operad.hpp"

using namespace natop;

TEST_CASE("realized interval morphisms") {
  // identity morphism: the corolla with legs in order
  Tree t = realize_interval(IntervalMorphism::identity(2));
  CHECK(tree_key(t) == "W1(L1,L2,L3)");
  // the unique morphism from <-1>: white vertex over specials
  auto ms = all_interval_morphisms(-1, 2);
  REQUIRE(ms.size() == 1);
  CHECK(tree_key(realize_interval(ms[0])) == "W1(S,S,S)");
}

TEST_CASE("coface and codegeneracy trees") {
  // outer faces multiply by a fresh argument
  CHECK(tree_key(generator_coface(1, 0)) == "B(L1,W1(L2))");
  CHECK(tree_key(generator_coface(1, 2)) == "B(W1(L1),L2)");
  // the inner face merges two arguments under a black vertex
  CHECK(tree_key(generator_coface(1, 1)) == "W1(B(L1,L2))");
  // codegeneracy trees grow a stub at the indexed slot
  CHECK(tree_key(generator_codegeneracy(1, 0)) == "W1(S,L1)");
  CHECK(tree_key(generator_codegeneracy(1, 1)) == "W1(L1,S)");
}

TEST_CASE("cup and braces") {
  CHECK(tree_key(cup_generator(1, 1)) == "B(W1(L1),W2(L2))");
  // f{g} with k = 2, m = 1: two summands, both +1
  TreeSum br = brace_generator(2, {1});
  CHECK(br.size() == 2);
  for (const auto& [k, tc] : br.terms()) CHECK(tc.second == 1);
  // term count = binomial(k, n-1)
  CHECK(brace_generator(3, {1, 1}).size() == 3);
  CHECK(brace_generator(2, {1, 1}).size() == 1);
  CHECK(brace_generator(2, {0, 0}).size() == 1);
  CHECK(brace_generator(1, {0, 0}).is_zero());  // not enough slots
  CHECK(brace_generator(0, {1}).is_zero());
  // the cup tree is planar and stub-free; codegeneracy trees are not stub-free
  CHECK(in_planar_suboperad(cup_generator(2, 1)));
  CHECK(!has_stub(cup_generator(2, 1)));
  CHECK(has_stub(generator_codegeneracy(2, 1)));
}

TEST_CASE("differential on the identity-operation tree") {
  const SignConvention conv = chosen_convention();
  Tree t = white(1, {leg(1)});
  TreeType ty{1, {1}};
  auto d = differential(t, ty, conv);
  // delta part: the three Hochschild faces of an arity-1 cochain
  TreeType up{2, {1}};
  REQUIRE(d.count(up));
  CHECK(d.at(up).coeff(canonicalize(black({leg(1), white(1, {leg(2)})}))) == 1);
  CHECK(d.at(up).coeff(white(1, {black({leg(1), leg(2)})})) == -1);
  CHECK(d.at(up).coeff(canonicalize(black({white(1, {leg(1)}), leg(2)}))) == 1);
  // del part: precomposition with the coboundary of an arity-0 cochain
  TreeType dn{1, {0}};
  REQUIRE(d.count(dn));
  CHECK(d.at(dn).coeff(canonicalize(black({leg(1), white(1, {})}))) == -1);
  CHECK(d.at(dn).coeff(canonicalize(black({white(1, {}), leg(1)}))) == 1);
}

TEST_CASE("d^2 = 0 on a sample of types") {
  const SignConvention conv = chosen_convention();
  for (TreeType ty : {TreeType{2, {1}}, TreeType{1, {1, 1}}, TreeType{0, {2}}, TreeType{3, {}}}) {
    for (const Tree& t : enumerate_basis(ty)) {
      std::map<TreeType, TreeSum> acc;
      for (const auto& [ty1, sum1] : differential(t, ty, conv))
        for (const auto& [k1, term1] : sum1.terms())
          for (const auto& [ty2, sum2] : differential(term1.first, ty1, conv)) {
            auto it = acc.find(ty2);
            if (it == acc.end()) it = acc.emplace(ty2, TreeSum(ty2)).first;
            it->second.add_scaled(sum2, term1.second);
          }
      for (const auto& [ty2, sum] : acc) CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("truncated components") {
  const SignConvention conv = chosen_convention();
  TruncatedComponent tc = truncated_complex(1, 2, 3, Suboperad::B, conv);
  // d o d = 0 within the truncation
  for (size_t i = 0; i + 1 < tc.d.size(); ++i)
    CHECK(multiply(tc.d[i + 1], tc.d[i]).is_zero());
  // basis closed under the suboperad filters
  TruncatedComponent bh = truncated_complex(1, 2, 3, Suboperad::Bhat, conv);
  for (const auto& row : bh.basis)
    for (const auto& [ty, t] : row) CHECK(!has_stub(t));
  // arity-0 stub-free component: dimension l! in degree l >= 2, the bare leg
  // in degree 1, nothing in degree 0
  TruncatedComponent b0 = truncated_complex(0, 0, 4, Suboperad::Bhat, conv);
  CHECK(b0.dim(0) == 0);
  CHECK(b0.dim(1) == 1);
  CHECK(b0.dim(2) == 2);
  CHECK(b0.dim(3) == 6);
  CHECK(b0.dim(4) == 24);
  TruncatedComponent n0 = truncated_complex(0, 0, 4, Suboperad::NormB, conv);
  CHECK(n0.dim(0) == 1);  // the exceptional unit tree
}

TEST_CASE("row complexes") {
  const SignConvention conv = chosen_convention();
  RowComplex rc = row_complex(1, 3, conv);
  CHECK(rc.basis[0].size() == 1);
  CHECK(rc.basis[1].size() == 3);
  for (size_t l = 0; l + 1 < rc.d.size(); ++l)
    CHECK(multiply(rc.d[l + 1], rc.d[l]).is_zero());
}
