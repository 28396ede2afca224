#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "natop/interval.hpp"
#include "natop/json_io.hpp"

using namespace natop;

TEST_CASE("objects and identity") {
  IntervalMorphism id2 = IntervalMorphism::identity(2);
  CHECK(is_order_preserving(id2));
  CHECK(id2.apply(-1) == -1);
  CHECK(id2.apply(3) == 3);
}

TEST_CASE("order preservation") {
  CHECK(is_order_preserving(IntervalMorphism::identity(2)));
  // the unique morphism <-1> -> <k-1>
  for (int k = 0; k <= 3; ++k) {
    auto ms = all_interval_morphisms(-1, k - 1);
    REQUIRE(ms.size() == 1);
    CHECK(is_order_preserving(ms[0]));
  }
  // the swap on <1>
  IntervalMorphism swap = aut(1, Perm({2, 1}));
  CHECK(!is_order_preserving(swap));
}

TEST_CASE("generators") {
  // s_0 : <0> -> <1> misses 0
  IntervalMorphism s0 = interval_codegeneracy(0, 0);
  CHECK(s0.apply(0) == 1);
  // d_1 : <1> -> <0> hits 0 twice
  IntervalMorphism d1 = interval_coface(1, 1);
  CHECK(d1.apply(0) == 0);
  CHECK(d1.apply(1) == 0);
  // d_0 : <0> -> <-1> sends the interior point to the bottom
  IntervalMorphism d0 = interval_coface(0, 0);
  CHECK(d0.apply(0) == -1);
}

TEST_CASE("composition block order and embedding") {
  // doubled interior fiber in swapped order
  IntervalMorphism f(1, 0,
                     {-1, 0, 0, 1},            // -1,0,1,2(=m+1) -> values
                     {{-1}, {1, 0}, {2}});     // fiber of 0 carries the swap
  CHECK(!is_order_preserving(f));
  auto [phi, h] = factorize(f);
  CHECK(is_order_preserving(phi));
  CHECK(compose(phi, aut(1, h)) == f);
  DeltaSMorphism g = embed_into_deltaS(f);
  CHECK(g.src == 3);
  CHECK(g.dst == 2);
  CHECK(g.map == std::vector<int>{0, 1, 1, 2});
  CHECK(g.fibers[1] == std::vector<int>{2, 1});
  // identity <0> -> identity [2]
  DeltaSMorphism gid = embed_into_deltaS(IntervalMorphism::identity(0));
  CHECK(gid.map == std::vector<int>{0, 1, 2});
  // the first coface <1> -> <0> embeds as the [3] -> [2] map hitting 1 twice
  DeltaSMorphism gd = embed_into_deltaS(interval_coface(1, 1));
  CHECK(gd.map == std::vector<int>{0, 1, 1, 2});
  // endpoint preservation forces 0 -> 0 and top -> top
  for (const IntervalMorphism& h : all_interval_morphisms(1, 1)) {
    DeltaSMorphism gh = embed_into_deltaS(h);
    CHECK(gh.map.front() == 0);
    CHECK(gh.map.back() == gh.dst);
  }
}

TEST_CASE("factorize trivial cases") {
  IntervalMorphism id1 = IntervalMorphism::identity(1);
  auto [phi, h] = factorize(id1);
  CHECK(phi == id1);
  CHECK(h.is_identity());
  Perm w({3, 1, 2});
  auto [phi2, h2] = factorize(aut(2, w));
  CHECK(phi2 == IntervalMorphism::identity(2));
  CHECK(h2 == w);
}

TEST_CASE("exhaustive factorization on <1> -> <0>") {
  for (const IntervalMorphism& f : all_interval_morphisms(1, 0)) {
    auto [phi, h] = factorize(f);
    CHECK(compose(phi, aut(1, h)) == f);
  }
}

TEST_CASE("crossed action") {
  IntervalMorphism phi = all_monotone_morphisms(1, 2)[2];
  auto [ph, hphi] = crossed_action(Perm::identity(3), phi);
  CHECK(ph.is_identity());
  CHECK(hphi == phi);
  auto [ph2, hphi2] = crossed_action(Perm({3, 1, 2}), IntervalMorphism::identity(2));
  CHECK(hphi2 == IntervalMorphism::identity(2));
  CHECK(ph2 == Perm({3, 1, 2}));
}

TEST_CASE("hom-set sizes") {
  CHECK(all_interval_morphisms(0, 0).size() == 3);
  CHECK(all_monotone_morphisms(0, 0).size() == 3);
  CHECK(all_interval_morphisms(1, 0).size() == 12);  // |I(<1>,<0>)| * 2!
  CHECK(all_monotone_morphisms(1, 0).size() == 6);
}

TEST_CASE("json round trip") {
  for (const IntervalMorphism& f : all_interval_morphisms(1, 1)) {
    json j = to_json(f);
    CHECK(interval_from_json(j) == f);
  }
}
