#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace natop {

using Int = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix used for boundary/coboundary maps.
/// Assembly happens with 64-bit coefficients (the structure constants are
/// tiny); all reductions are done in arbitrary precision.
struct SpMat {
  long rows = 0;
  long cols = 0;
  // cols_[c] = sorted list of (row, value), value != 0.
  std::vector<std::vector<std::pair<long, long long>>> cols_;

  SpMat() = default;
  SpMat(long r, long c) : rows(r), cols(c), cols_(static_cast<size_t>(c)) {}

  void add(long r, long c, long long v);
  void finalize();  // sort and combine duplicate entries per column
  long long nnz() const;
  bool is_zero() const;

  static SpMat identity(long n);
};

/// C = A * B.
SpMat multiply(const SpMat& a, const SpMat& b);
SpMat add_scaled(const SpMat& a, long long alpha, const SpMat& b, long long beta);
bool equal(const SpMat& a, const SpMat& b);

struct SnfResult {
  long rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
};

/// Smith normal form summary.  Unimodular (+-1) pivots are eliminated first
/// with Markowitz-style pivot selection; the remainder is finished by
/// classical pivot-magnitude-minimizing reduction.
SnfResult smith_normal_form(const SpMat& m);

}  // namespace natop
