#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "natop/interval.hpp"
#include "natop/intmat.hpp"
#include "natop/tree.hpp"

namespace natop {

/// The natural operation attached to a crossed-interval morphism
/// g : <l-1> -> <k-1>: one white vertex of arity k, a black root collecting
/// the fiber of -1, the white output and the fiber of k, and each white
/// input i fed by the legs of the fiber over i in fiber order (empty fiber =
/// a special vertex).  Canonicalized.
Tree realize_interval(const IntervalMorphism& g);
TreeType realize_type(const IntervalMorphism& g);

/// Coface tree F_i in the (l+1; l) component, 0 <= i <= l+1: the i-th
/// Hochschild face (outer faces multiply by a fresh argument, inner face i
/// merges arguments i, i+1).
Tree generator_coface(int l, int i);
/// Codegeneracy tree in the (k; k+1) component, 0 <= i <= k: the white
/// vertex with a special vertex grown at slot i (0-based).
Tree generator_codegeneracy(int k, int i);

/// Sign convention for the totalized differential d = delta - sum_j del_j.
/// The delta term at coface i of a tree of type (l; k_1..k_n) carries
/// (-1)^(i + e0 + e1*l + e2*K), the del_j term at face i carries
/// (-1)^(i + c0 + c1*l + c2*K + c3*(k_1+..+k_{j-1})) where K = sum k.
/// comp_koszul switches the Koszul sign of the graded insertion.
struct SignConvention {
  int e0 = 0, e1 = 0, e2 = 0;
  int c0 = 0, c1 = 1, c2 = 1, c3 = 1;
  bool comp_koszul = true;
  bool operator==(const SignConvention& o) const;
  std::string str() const;
};

/// The convention fixed by the d^2 = 0 / Leibniz search (see tests): delta
/// with plain (-1)^i, del_j with offset l + K + k_1+..+k_{j-1}, Koszul
/// composition signs on.
SignConvention chosen_convention();

TreeSum delta_part(const Tree& t, const TreeType& ty, const SignConvention& conv);
TreeSum del_part(const Tree& t, const TreeType& ty, int j, const SignConvention& conv);
/// d(t) = delta(t) - sum_j del_j(t); the delta part is omitted when
/// l_cut >= 0 and l + 1 > l_cut (quotient truncation).
std::map<TreeType, TreeSum> differential(const Tree& t, const TreeType& ty,
                                         const SignConvention& conv, int l_cut = -1);
std::map<TreeType, TreeSum> differential(const TreeSum& ts, const SignConvention& conv,
                                         int l_cut = -1);

/// Graded operadic composition: insertion with the Koszul sign
/// (-1)^(deg t2 * (k_1+..+k_{i-1})).
std::pair<Tree, long long> compose_graded(const Tree& t1, const TreeType& ty1, int i,
                                          const Tree& t2, const TreeType& ty2,
                                          const SignConvention& conv);
TreeSum compose_graded(const TreeSum& a, int i, const TreeSum& b,
                       const SignConvention& conv);

enum class Suboperad { B, Bhat, NormB };
Suboperad suboperad_from_string(const std::string& s);
std::string suboperad_name(Suboperad s);

/// Basis membership for the truncated complexes.
bool suboperad_member(const Tree& t, Suboperad sub);

/// The (K, L)-truncated total complex of the arity-n component: basis trees
/// with sum(k) <= K (a subcomplex) and l <= L (a quotient complex), graded
/// by l - sum(k).
struct TruncatedComponent {
  int n = 0;
  int K = 0;
  int L = 0;
  Suboperad sub = Suboperad::B;
  SignConvention conv;
  int lo = 0;  // lowest total degree
  std::vector<std::vector<std::pair<TreeType, Tree>>> basis;  // per degree lo+idx
  std::vector<SpMat> d;  // d[idx] : degree lo+idx -> lo+idx+1

  int hi() const { return lo + static_cast<int>(basis.size()) - 1; }
  long dim(int degree) const;
};

TruncatedComponent truncated_complex(int n, int K, int L, Suboperad sub,
                                     const SignConvention& conv);

/// The row complex: fixed input colour k at arity 1, cosimplicial direction
/// only, degrees l = 0..L.
struct RowComplex {
  int k = 0;
  int L = 0;
  std::vector<std::vector<Tree>> basis;  // per l
  std::vector<SpMat> d;                  // d[l] : l -> l+1
};
RowComplex row_complex(int k, int L, const SignConvention& conv);

/// Cup product generator in the (k+l; k, l) component.
Tree cup_generator(int k, int l);

/// Brace f{g_2..g_n} for f of arity k and g_j of arity ms[j-2]: the signed
/// sum over all order-preserving substitutions, with the total number of
/// inputs in front of g_j weighting its (deg-1).
TreeSum brace_generator(int k, const std::vector<int>& ms);

}  // namespace natop
