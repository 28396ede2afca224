#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "natop/perm.hpp"

using namespace natop;

TEST_CASE("composition and inverses") {
  CHECK(compose(Perm({2, 1}), Perm({2, 1})) == Perm::identity(2));
  Perm s({2, 3, 1});
  CHECK(compose(Perm::identity(3), s) == s);
  CHECK(compose(s, Perm::identity(3)) == s);
  CHECK(compose(Perm({2, 3, 1}), Perm({3, 1, 2})) == Perm::identity(3));
  CHECK(inverse(s) == Perm({3, 1, 2}));
  CHECK_THROWS(compose(Perm({1}), Perm({1, 2})));
  CHECK_THROWS(Perm({1, 1}));
  CHECK_THROWS(Perm({0, 1}));
}

TEST_CASE("sign") {
  CHECK(sign(Perm::identity(4)) == 1);
  CHECK(sign(Perm({2, 1})) == -1);
  CHECK(sign(Perm({3, 2, 1})) == -1);  // three inversions
}

TEST_CASE("grade decomposition") {
  for (int n = 1; n <= 5; ++n) CHECK(grade(Perm::identity(n)).g == n - 1);
  GradeDecomposition g = grade(Perm({2, 1}));
  CHECK(g.a == 0);
  CHECK(g.b == 0);
  CHECK(g.c == 0);
  CHECK(g.g == 0);
  g = grade(Perm({1, 3, 4, 2}));
  CHECK(g.a == 1);
  CHECK(g.omega == Perm({2, 3, 1}));
  CHECK(g.b == 1);
  CHECK(g.c == 0);
  CHECK(g.g == 2);
}

TEST_CASE("contraction") {
  CHECK(contract(Perm::identity(5)) == Perm::identity(1));
  CHECK(contract(Perm({2, 1})) == Perm({2, 1}));
  CHECK(contract(Perm({1, 3, 4, 2})) == Perm({2, 1}));
  // grade counts the strands removed by contraction
  for (const Perm& p : all_perms(5))
    if (!p.is_identity()) CHECK(grade(p).g == 5 - contract(p).arity());
}

TEST_CASE("cofaces") {
  CHECK(coface(Perm({2, 1}), 0) == Perm({1, 3, 2}));
  CHECK(coface(Perm({2, 1}), 3) == Perm({2, 1, 3}));
  CHECK(coface(Perm({2, 1}), 1) == Perm({2, 3, 1}));
  CHECK_THROWS(coface(Perm({2, 1}), 4));
  // cosimplicial coface identity d_j d_i = d_i d_{j-1}, i < j
  for (const Perm& p : all_perms(3))
    for (int j = 0; j <= 4 + 1; ++j)
      for (int i = 0; i < j && i <= 4; ++i)
        CHECK(coface(coface(p, i), j) == coface(coface(p, j - 1), i));
}

TEST_CASE("codegeneracies invert the matching cofaces") {
  for (const Perm& p : all_perms(4)) {
    for (int i = 0; i <= 3; ++i) {
      CHECK(codegeneracy(coface(p, i), i) == p);
      CHECK(codegeneracy(coface(p, i + 1), i) == p);
    }
  }
}

TEST_CASE("index twists") {
  Perm h({2, 1});
  CHECK(bar_index(h, 0) == 0);
  CHECK(bar_index(h, 1) == 2);
  CHECK(bar_index(h, 3) == 3);
  for (int i = 0; i <= 3; ++i) CHECK(bar_index(Perm::identity(2), i) == i);
  CHECK(under_index(h, 0) == 1);
  CHECK(under_index(h, 1) == 0);
}

TEST_CASE("simple permutations") {
  CHECK(simple_perms(2).size() == 1);
  CHECK(simple_perms(3).size() == 1);
  CHECK(is_simple(Perm::identity(1)));
  CHECK(!is_simple(Perm::identity(3)));
}

TEST_CASE("ranking") {
  for (int n = 0; n <= 4; ++n) {
    auto ps = all_perms(n);
    CHECK(static_cast<long>(ps.size()) == factorial(n));
    for (size_t i = 0; i < ps.size(); ++i) CHECK(perm_rank(ps[i]) == static_cast<long>(i));
  }
}
