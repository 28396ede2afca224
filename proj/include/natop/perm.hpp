#pragma once

#include <string>
#include <vector>

namespace natop {

/// A permutation in one-line notation with 1-based images.
///
/// S_0 (the empty permutation) and S_1 are admitted so that arity-0 and
/// arity-1 colours behave uniformly.  Values are immutable after
/// construction; every free function below is pure.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int arity() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1 <= i <= arity.
  int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const;

  std::string str() const;

private:
  std::vector<int> images_;
};

/// (p*q)(i) = p(q(i)); arities must agree.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
int sign(const Perm& p);

/// sigma = 1_a x omega x 1_c with b the number of doubled strings of omega
/// and g = a + b + c.  For the identity 1_n the special rule g = n - 1
/// applies and the tuple is reported as (a, b, c) = (n - 1, 0, 0) with
/// omega = 1_1, so g = a + b + c still holds.
struct GradeDecomposition {
  int a = 0;
  int b = 0;
  int c = 0;
  int g = 0;
  Perm omega;
  Perm kappa;
};

GradeDecomposition grade(const Perm& p);

/// kappa(sigma): contract every doubled string of omega(sigma) into a simple
/// one; kappa(1_n) = 1_1.  Lands in S_{n - g}.
Perm contract(const Perm& p);

/// Simple means grade zero (this includes 1_1).
bool is_simple(const Perm& p);

/// Coface d_i : S_q -> S_{q+1}, 0 <= i <= q+1.  d_0 = 1 x sigma,
/// d_{q+1} = sigma x 1, and for 1 <= i <= q the i-th input strand is doubled
/// (the two copies map to adjacent outputs sigma(i), sigma(i)+1).
Perm coface(const Perm& p, int i);

/// Codegeneracy s_i : S_q -> S_{q-1}, 0 <= i <= q-1: deletes strand i+1 and
/// renumbers.  Validated against the interval-level commuting squares.
Perm codegeneracy(const Perm& p, int i);

/// Twisted coface index: h-bar(i) fixes 0 and n+1 and equals h on 1..n.
int bar_index(const Perm& h, int i);

/// Twisted codegeneracy index: h-under(i) = h(i+1) - 1 for 0 <= i <= n-1.
int under_index(const Perm& h, int i);

std::vector<Perm> all_perms(int n);
std::vector<Perm> simple_perms(int n);

/// Rank of p in the lexicographic enumeration of S_n (0-based).
long perm_rank(const Perm& p);
long factorial(int n);

}  // namespace natop
