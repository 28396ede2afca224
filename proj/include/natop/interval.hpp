#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "natop/perm.hpp"

namespace natop {

/// A morphism of the crossed interval category: a map of intervals
/// <m> = {-1, 0..m, m+1} -> <n> preserving the endpoints, together with a
/// linear order on every non-empty fiber.  -1 must be minimal in the fiber
/// over -1 and m+1 maximal in the fiber over n+1.
///
/// Internally points of <k> are plain ints -1..k+1; arrays are indexed by
/// point + 1.
class IntervalMorphism {
public:
  /// map[x + 1] is the image of x; fibers[i + 1] is the ordered fiber of i.
  IntervalMorphism(int src_n, int dst_n, std::vector<int> map,
                   std::vector<std::vector<int>> fibers);

  /// Order-preserving morphism with the given underlying map (fibers get the
  /// natural order).
  static IntervalMorphism monotone(int src_n, int dst_n, std::vector<int> map);
  static IntervalMorphism identity(int n);

  int src() const { return src_n_; }
  int dst() const { return dst_n_; }
  int apply(int x) const { return map_[static_cast<size_t>(x) + 1]; }
  const std::vector<int>& fiber(int i) const {
    return fibers_[static_cast<size_t>(i) + 1];
  }
  const std::vector<int>& map_points() const { return map_; }

  bool operator==(const IntervalMorphism& o) const;
  bool operator<(const IntervalMorphism& o) const;
  std::string str() const;

private:
  int src_n_;
  int dst_n_;
  std::vector<int> map_;
  std::vector<std::vector<int>> fibers_;
};

bool is_order_preserving(const IntervalMorphism& f);

/// g after f.  The order on (g o f)^{-1}(i) is the block order: the blocks
/// f^{-1}(j) are arranged by the position of j in g's fiber order of i, each
/// block keeping f's internal fiber order.  This is the unique rule that
/// makes the bar-construction action functorial.
IntervalMorphism compose(const IntervalMorphism& g, const IntervalMorphism& f);

/// The interior permutation h in S_{n+1} as an automorphism of <n>:
/// the interior point x (0-based) is sent to h(x+1) - 1.
IntervalMorphism aut(int n, const Perm& h);

/// Unique factorization f = phi o aut(h) with phi order-preserving.
std::pair<IntervalMorphism, Perm> factorize(const IntervalMorphism& f);

/// For h in S_{n+1} acting on phi's target <n> and phi : <m> -> <n> in I,
/// the unique pair with aut(h) o phi = h_star_phi o aut(phi_star_h).
/// Returns (phi_star_h, h_star_phi).
std::pair<Perm, IntervalMorphism> crossed_action(const Perm& h,
                                                 const IntervalMorphism& phi);

/// d_i : <m> -> <m-1>, 0 <= i <= m+1, the order-preserving map hitting i-1
/// twice (the Joyal dual of the i-th simplicial face).
IntervalMorphism interval_coface(int m, int i);

/// s_i : <m> -> <m+1>, 0 <= i <= m+1, the order-preserving map missing i.
IntervalMorphism interval_codegeneracy(int m, int i);

/// Image of f under <n> |-> [n+2]: the map [m+2] -> [n+2] with
/// g(i) = f(i-1) + 1 in 0-based coordinates, carrying the same fiber orders.
struct DeltaSMorphism {
  int src = 0;  // [src]
  int dst = 0;
  std::vector<int> map;                  // map[i], 0 <= i <= src
  std::vector<std::vector<int>> fibers;  // fibers[i], 0 <= i <= dst
  bool operator==(const DeltaSMorphism& o) const {
    return src == o.src && dst == o.dst && map == o.map && fibers == o.fibers;
  }
};
DeltaSMorphism embed_into_deltaS(const IntervalMorphism& f);

/// All morphisms <m> -> <n> of the crossed interval category.
std::vector<IntervalMorphism> all_interval_morphisms(int m, int n);
/// The order-preserving ones only.
std::vector<IntervalMorphism> all_monotone_morphisms(int m, int n);

/// The twisted structure maps of the free crossed functor on pairs (x, h):
/// coface i maps (x, h) to (d_{hbar(i)} x, d_i h), codegeneracy i to
/// (s_{hunder(i)} x, s_i h).  Only the index bookkeeping lives here; linear
/// extension is done by the complexes module.
std::pair<int, Perm> free_coface_indices(const Perm& h, int i);
std::pair<int, Perm> free_codegeneracy_indices(const Perm& h, int i);

}  // namespace natop
