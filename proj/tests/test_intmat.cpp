#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "natop/intmat.hpp"

using namespace natop;

TEST_CASE("basic ops") {
  SpMat a(2, 2);
  a.add(0, 0, 1);
  a.add(1, 1, 2);
  a.add(1, 1, -2);  // cancels
  a.finalize();
  CHECK(a.nnz() == 1);
  CHECK(equal(multiply(a, SpMat::identity(2)), a));
}

TEST_CASE("smith normal form basics") {
  // 0 -> Z: zero matrix has rank 0
  SpMat z(1, 1);
  z.finalize();
  auto r = smith_normal_form(z);
  CHECK(r.rank == 0);
  CHECK(r.torsion.empty());
  // multiplication by 2: cokernel Z/2
  SpMat two(1, 1);
  two.add(0, 0, 2);
  two.finalize();
  r = smith_normal_form(two);
  CHECK(r.rank == 1);
  REQUIRE(r.torsion.size() == 1);
  CHECK(r.torsion[0] == 2);
}

TEST_CASE("known invariant factors") {
  // U * diag(1,2,6) * V with unit-triangular U, V, so the invariant factors
  // are 1, 2, 6 by construction:  [[1,1,0],[1,3,2],[0,2,8]].
  SpMat m(3, 3);
  m.add(0, 0, 1);
  m.add(0, 1, 1);
  m.add(1, 0, 1);
  m.add(1, 1, 3);
  m.add(1, 2, 2);
  m.add(2, 1, 2);
  m.add(2, 2, 8);
  m.finalize();
  auto r = smith_normal_form(m);
  CHECK(r.rank == 3);
  REQUIRE(r.torsion.size() == 2);
  CHECK(r.torsion[0] == 2);
  CHECK(r.torsion[1] == 6);
}

TEST_CASE("random matrices: rank and determinant-divisor consistency") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int rep = 0; rep < 30; ++rep) {
    const long n = 5;
    SpMat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m.add(i, j, e(rng));
    m.finalize();
    auto r = smith_normal_form(m);
    CHECK(r.rank <= n);
    // product of all invariant factors = |det| when full rank; check by
    // fraction-free determinant
    long long det = 0;
    {
      // Bareiss on a copy
      std::vector<std::vector<long long>> a(static_cast<size_t>(n),
                                            std::vector<long long>(static_cast<size_t>(n), 0));
      for (long c = 0; c < n; ++c)
        for (auto& [row, v] : m.cols_[static_cast<size_t>(c)])
          a[static_cast<size_t>(row)][static_cast<size_t>(c)] = v;
      long long prev = 1;
      long long sign = 1;
      bool singular = false;
      for (long k = 0; k < n; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
          long p = -1;
          for (long i = k + 1; i < n; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
              p = i;
              break;
            }
          if (p < 0) {
            singular = true;
            break;
          }
          std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(p)]);
          sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
          for (long j = k + 1; j < n; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                     a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                 a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                prev;
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (long i = k + 1; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
      }
      det = singular ? 0 : sign * a[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
    }
    if (det != 0) {
      CHECK(r.rank == n);
      Int prod = 1;
      for (long i = 0; i < r.rank - static_cast<long>(r.torsion.size()); ++i) prod *= 1;
      for (const Int& t : r.torsion) prod *= t;
      CHECK(prod == Int(det < 0 ? -det : det));
    } else {
      CHECK(r.rank < n);
    }
  }
}
