#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "natop/json_io.hpp"
#include "natop/tree.hpp"

using namespace natop;

TEST_CASE("canonicalization rules") {
  // already canonical
  Tree t = white(1, {leg(1)});
  CHECK(tree_key(canonicalize(t)) == tree_key(t));
  // black-black collapse
  Tree bb = black({black({leg(1), leg(2)}), leg(3)});
  CHECK(tree_key(canonicalize(bb)) == "B(L1,L2,L3)");
  // unit law: special under black disappears, arity-1 black splices
  Tree su = black({special(), leg(1)});
  CHECK(tree_key(canonicalize(su)) == "L1");
  // black that loses everything becomes special
  Tree bs = white(1, {black({special(), special()})});
  CHECK(tree_key(canonicalize(bs)) == "W1(S)");
}

TEST_CASE("validation") {
  TreeType ty{1, {1}};
  CHECK_NOTHROW(validate_tree(white(1, {leg(1)}), ty));
  CHECK_THROWS(validate_tree(white(1, {leg(1), leg(2)}), ty));         // wrong arity
  CHECK_THROWS(validate_tree(black({leg(1), black({leg(2), leg(3)})}), TreeType{3, {}}));
  CHECK_THROWS(validate_tree(black({special(), leg(1), leg(2)}), TreeType{2, {}}));
  CHECK_NOTHROW(validate_tree(special(), TreeType{0, {}}));
  CHECK_NOTHROW(validate_tree(leg(1), TreeType{1, {}}));
}

TEST_CASE("infer type") {
  Tree t = black({leg(2), white(1, {leg(1)}), white(2, {})});
  TreeType ty = infer_type(t);
  CHECK(ty.l == 2);
  CHECK(ty.ks == std::vector<int>{1, 0});
  CHECK(ty.degree() == 1);
}

TEST_CASE("basis enumeration matches the small counts") {
  CHECK(enumerate_basis(TreeType{0, {2}}).size() == 1);   // white over two specials
  CHECK(enumerate_basis(TreeType{1, {1}}).size() == 3);
  CHECK(enumerate_basis(TreeType{1, {}}).size() == 1);    // the bare leg
  CHECK(enumerate_basis(TreeType{0, {}}).size() == 1);    // the bare special
  CHECK(enumerate_basis(TreeType{2, {}}).size() == 2);    // labelled 2-corollas
  CHECK(enumerate_basis(TreeType{3, {}}).size() == 6);
  // counts match the hom-set sizes of the underlying category (l, k <= 3)
  // dim = C(l+k+1, k+1) * l!
  auto binom = [](int a, int b) {
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int l = 0; l <= 3; ++l)
    for (int k = 0; k <= 3; ++k)
      CHECK(static_cast<long>(enumerate_basis(TreeType{l, {k}}).size()) ==
            binom(l + k + 1, k + 1) * factorial(l));
}

TEST_CASE("insertion") {
  // grafting with relabelling
  Tree t1 = white(1, {leg(1), white(2, {leg(2)})});
  TreeType ty1{2, {2, 1}};
  Tree t2 = white(1, {white(2, {leg(1)}), leg(2)});
  TreeType ty2{2, {2, 1}};
  Tree got = insert_tree(t1, ty1, 1, t2, ty2);
  TreeType gotty = insert_type(ty1, 1, ty2);
  CHECK(gotty.l == 2);
  CHECK(gotty.ks == std::vector<int>{2, 1, 1});
  validate_tree(got, gotty);
  // inserting the bare special into an arity-0 slot grows a stub
  Tree got2 = insert_tree(white(1, {leg(1), white(2, {})}), TreeType{1, {1, 0}}, 2,
                          special(), TreeType{0, {}});
  CHECK(tree_key(got2) == "W1(L1,S)");
  CHECK_THROWS(insert_tree(t1, ty1, 1, special(), TreeType{0, {}}));  // colour mismatch
}

TEST_CASE("symmetric action") {
  Tree t = black({white(1, {leg(1)}), white(2, {special()})});
  TreeType ty{1, {1, 0}};
  Perm tau({2, 1});
  Tree tt = sym_act(t, tau);
  CHECK(sym_act_type(ty, tau).ks == std::vector<int>{0, 1});
  CHECK(tree_key(sym_act(tt, tau)) == tree_key(t));  // involution
  CHECK(tree_key(sym_act(t, Perm::identity(2))) == tree_key(t));
}

TEST_CASE("planar splitting") {
  for (const Tree& t : enumerate_basis(TreeType{3, {2}})) {
    auto [planar, sigma] = split_labels(t);
    CHECK(in_planar_suboperad(planar));
    CHECK(tree_key(join_labels(planar, sigma)) == tree_key(t));
  }
  Tree t = black({leg(2), white(1, {leg(1)})});
  auto [planar, sigma] = split_labels(t);
  CHECK(sigma == Perm({2, 1}));
}

TEST_CASE("stubs and membership") {
  CHECK(has_stub(white(1, {special()})));
  CHECK(!has_stub(white(1, {leg(1)})));
  CHECK(!has_stub(special()));  // the exceptional tree is not a stub
  CHECK(is_exceptional_unit(special()));
  CHECK(in_planar_suboperad(white(1, {leg(1), leg(2)})));
  CHECK(!in_planar_suboperad(white(1, {leg(2), leg(1)})));
}

TEST_CASE("json round trip") {
  for (const Tree& t : enumerate_basis(TreeType{2, {1, 1}})) {
    CHECK(tree_key(tree_from_json(to_json(t))) == tree_key(t));
  }
  SpMat m(3, 2);
  m.add(0, 0, 2);
  m.add(2, 1, -5);
  m.finalize();
  CHECK(equal(spmat_from_json(to_json(m)), m));
  TreeSum ts(TreeType{1, {1}});
  ts.add(white(1, {leg(1)}), 3);
  ts.add(canonicalize(black({leg(1), white(1, {special()})})), -2);
  TreeSum back = tree_sum_from_json(to_json(ts));
  CHECK(back.terms().size() == 2);
  CHECK(back.coeff(white(1, {leg(1)})) == 3);
}
