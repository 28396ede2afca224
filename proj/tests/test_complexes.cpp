#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "natop/complexes.hpp"

using namespace natop;

TEST_CASE("standard dual: dimensions and displayed cofaces") {
  CosimplicialGroup d3 = build_D(3, 3);
  CHECK(d3.dims[0] == 4);  // singletons <a0>
  CHECK(d3.dims[1] == 10);
  d3.check_identities();
  // the displayed values of the cofaces on <1,1> in degree 2
  // d_0<1,1> = <0,1,1> + <1,1,1>, d_1<1,1> = <1,1,1>,
  // d_2<1,1> = <1,1,1> + <1,1,2> + <1,1,3>
  auto tuples1 = d_tuples(3, 1);
  auto tuples2 = d_tuples(3, 2);
  auto index_of = [](const std::vector<std::vector<int>>& basis, const std::vector<int>& t) {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == t) return static_cast<long>(i);
    return -1L;
  };
  long col = index_of(tuples1, {1, 1});
  auto column_terms = [&](int i) {
    std::map<std::vector<int>, long long> out;
    const SpMat& m = d3.cofaces[2][static_cast<size_t>(i)];
    for (const auto& [row, v] : m.cols_[static_cast<size_t>(col)])
      out[tuples2[static_cast<size_t>(row)]] = v;
    return out;
  };
  auto c0 = column_terms(0);
  CHECK(c0.size() == 2);
  CHECK(c0.at({0, 1, 1}) == 1);
  CHECK(c0.at({1, 1, 1}) == 1);
  auto c1 = column_terms(1);
  CHECK(c1.size() == 1);
  CHECK(c1.at({1, 1, 1}) == 1);
  auto c2 = column_terms(2);
  CHECK(c2.size() == 3);
  CHECK(c2.at({1, 1, 1}) == 1);
  CHECK(c2.at({1, 1, 2}) == 1);
  CHECK(c2.at({1, 1, 3}) == 1);
}

TEST_CASE("nerve of a constant cosimplicial group telescopes") {
  // all components Z, all structure maps the identity: the alternating sum
  // has m+2 terms, so d vanishes in even degrees and is -1 in odd ones
  CosimplicialGroup c;
  c.N = 4;
  c.dims.assign(5, 1);
  c.cofaces.resize(5);
  c.codegens.resize(4);
  for (int n = 1; n <= 4; ++n)
    c.cofaces[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, SpMat::identity(1));
  for (int n = 0; n <= 3; ++n)
    c.codegens[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, SpMat::identity(1));
  c.check_identities();
  CochainComplex nc = nerve(c);
  nc.check_complex();
  for (int m = 0; m < 4; ++m) {
    if (m % 2 == 0) {
      CHECK(nc.d[static_cast<size_t>(m)].is_zero());
    } else {
      CHECK(nc.d[static_cast<size_t>(m)].nnz() == 1);
      CHECK(nc.d[static_cast<size_t>(m)].cols_[0][0].second == -1);
    }
  }
}

TEST_CASE("unit inclusion is a cosimplicial map") {
  CosimplicialGroup d = build_D(2, 3);
  CosimplicialGroup f = free_crossed(d);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      SpMat lhs = multiply(f.cofaces[static_cast<size_t>(n)][static_cast<size_t>(i)],
                           unit_inclusion_matrix(d, n - 1));
      SpMat rhs = multiply(unit_inclusion_matrix(d, n),
                           d.cofaces[static_cast<size_t>(n)][static_cast<size_t>(i)]);
      CHECK(equal(lhs, rhs));
    }
}

TEST_CASE("nerve squares to zero and has the right homology") {
  for (int q = 0; q <= 2; ++q) {
    CochainComplex c = nerve(build_D(q, 4));
    c.check_complex();
    auto h = homology(c, 0, 3);
    CHECK(h[0].betti == 1);
    for (int t = 1; t <= 3; ++t) {
      CHECK(h[t].betti == 0);
      CHECK(h[t].torsion.empty());
    }
  }
}

TEST_CASE("extended dual is acyclic") {
  for (int q = 0; q <= 3; ++q) {
    CochainComplex c = nerve_Dhat(q, 4);
    c.check_complex();
    auto h = homology(c, -1, 3);
    for (auto& [t, v] : h) {
      CHECK(v.betti == 0);
      CHECK(v.torsion.empty());
    }
  }
}

TEST_CASE("free crossed extension dimensions and identities") {
  for (int q = 0; q <= 3; ++q) {
    CosimplicialGroup f = free_crossed(build_D(q, 3));
    for (int n = 0; n <= 3; ++n)
      CHECK(f.dims[static_cast<size_t>(n)] == dim_D(q, n) * factorial(n));
    f.check_identities();
    nerve(f).check_complex();
  }
}

TEST_CASE("sign projection splits the unit inclusion") {
  CosimplicialGroup d = build_D(1, 3);
  for (int n = 0; n <= 3; ++n) {
    SpMat m = miraculous_matrix(d, n);
    SpMat i = unit_inclusion_matrix(d, n);
    CHECK(equal(multiply(m, i), SpMat::identity(d.dims[static_cast<size_t>(n)])));
  }
}

TEST_CASE("homology of simple complexes") {
  // 0 -> Z -> 0
  CochainComplex c;
  c.lo = 0;
  c.dims = {1};
  auto h = homology(c, 0, 0);
  CHECK(h[0].betti == 1);
  CHECK(h[0].torsion.empty());
  // Z --2--> Z
  CochainComplex c2;
  c2.lo = 0;
  c2.dims = {1, 1};
  SpMat two(1, 1);
  two.add(0, 0, 2);
  two.finalize();
  c2.d = {two};
  auto h2 = homology(c2, 0, 1);
  CHECK(h2[0].betti == 0);
  CHECK(h2[1].betti == 0);
  REQUIRE(h2[1].torsion.size() == 1);
  CHECK(h2[1].torsion[0] == 2);
}

TEST_CASE("tensor products") {
  // two copies of (Z --2--> Z): torsion multiplies per Kunneth
  CochainComplex c2;
  c2.lo = 0;
  c2.dims = {1, 1};
  SpMat two(1, 1);
  two.add(0, 0, 2);
  two.finalize();
  c2.d = {two};
  CochainComplex t = tensor(c2, c2);
  t.check_complex();
  CHECK(t.dim(0) == 1);
  CHECK(t.dim(1) == 2);
  CHECK(t.dim(2) == 1);
  auto h = homology(t, 0, 2);
  CHECK(h[0].betti == 0);
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == 2);
  // acyclic tensor acyclic stays acyclic
  CochainComplex a;
  a.lo = 0;
  a.dims = {1, 1};
  SpMat one(1, 1);
  one.add(0, 0, 1);
  one.finalize();
  a.d = {one};
  CochainComplex ta = tensor(a, a);
  ta.check_complex();
  auto ha = homology(ta, 0, 2);
  for (auto& [deg, v] : ha) CHECK((v.betti == 0 && v.torsion.empty()));
}

TEST_CASE("bicomplex and totalization") {
  // bicomplex concentrated in one bidegree: totalize is the same group
  CosimplicialGroup d0 = build_D(0, 2);
  ChainFactor v;
  v.dims = {1};
  Bicomplex b = nerve_bicomplex(d0, v);
  b.check_bicomplex();
  CochainComplex t = totalize(b);
  t.check_complex();
  CHECK(t.dim(0) == 1);
  // two-column bicomplex: the mapping-cone sign pattern gives d^2 = 0
  ChainFactor v2;
  v2.dims = {1, 1};
  SpMat dv(1, 1);
  dv.add(0, 0, 3);
  dv.finalize();
  v2.d = {dv};
  Bicomplex b2 = nerve_bicomplex(build_D(1, 3), v2);
  b2.check_bicomplex();
  CochainComplex t2 = totalize(b2);
  t2.check_complex();
}

TEST_CASE("summand classification consistency") {
  // identity goes to the base summand
  CHECK(classify_summand({0, 1}, Perm::identity(1)).unit);
  // counts agree with the closed formula on a sample
  for (int q = 0; q <= 2; ++q) {
    auto infos = decompose_ranks(q, 4);
    for (const auto& info : infos)
      for (int n = 0; n <= 4; ++n)
        CHECK(info.rank_per_degree[static_cast<size_t>(n)] ==
              summand_rank_formula(q, info.key, n));
  }
}
