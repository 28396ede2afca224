#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "natop/intmat.hpp"
#include "natop/perm.hpp"

namespace natop {

/// A cochain complex of finitely generated free abelian groups on a finite
/// degree window, d raising the degree by one.
struct CochainComplex {
  int lo = 0;
  std::vector<long> dims;
  std::vector<SpMat> d;  // d[i] : degree lo+i -> lo+i+1; size dims.size()-1
  std::vector<std::vector<std::string>> labels;  // optional

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  long dim(int degree) const;
  const SpMat* diff(int degree) const;  // nullptr when out of window
  void check_complex() const;           // throws unless d o d = 0
};

struct HomologySummary {
  long betti = 0;
  std::vector<Int> torsion;
  bool operator==(const HomologySummary& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
  std::string str() const;
};

/// Homology in each degree of [deg_lo, deg_hi]; each boundary matrix is
/// reduced once.
std::map<int, HomologySummary> homology(const CochainComplex& c, int deg_lo, int deg_hi);

/// Direct sum and tensor product (Koszul signs on the differential).
CochainComplex direct_sum(const CochainComplex& a, const CochainComplex& b);
CochainComplex tensor(const CochainComplex& a, const CochainComplex& b);
CochainComplex shift(CochainComplex c, int s);  // degree relabelling, no signs

/// A cosimplicial abelian group materialized up to degree N, with an
/// optional augmentation piece in degree -1 (used by the extended duals).
struct CosimplicialGroup {
  int N = 0;
  std::vector<long> dims;                        // degree 0..N
  std::vector<std::vector<std::string>> labels;  // optional
  std::vector<std::vector<SpMat>> cofaces;       // cofaces[n][i]: C^{n-1}->C^n, 0<=i<=n
  std::vector<std::vector<SpMat>> codegens;      // codegens[n][i]: C^{n+1}->C^n, 0<=i<=n
  bool augmented = false;
  long aug_dim = 0;
  SpMat aug_d0;  // degree -1 -> 0

  void check_identities() const;  // cosimplicial identities, throws on failure
};

/// The componentwise linear dual of the simplicial abelian group spanned by
/// the standard q-simplex: basis the weakly increasing tuples, cofaces by
/// value insertion, codegeneracies dual to entry duplication.
CosimplicialGroup build_D(int q, int N);
/// build_D extended by the empty bracket in degree -1.
CosimplicialGroup build_Dhat(int q, int N);

long dim_D(int q, int n);     // C(q+n+1, n+1); n = -1 gives 1
std::vector<std::vector<int>> d_tuples(int q, int n);

/// Free crossed extension: degree q becomes C^q x S_q with twisted
/// structure maps d_i(x,h) = (d_{hbar(i)} x, d_i h).   Basis index is
/// perm_rank(sigma) * dim C^q + x.
CosimplicialGroup free_crossed(const CosimplicialGroup& c);

/// Alternating-sign cochain complex of a cosimplicial group
/// (d = sum (-1)^{i+m} d_i on degree m).
CochainComplex nerve(const CosimplicialGroup& c);

/// The sign-weighted projection (a, sigma) -> sgn(sigma) a as a matrix per
/// degree, and the inclusion a -> (a, identity).
SpMat miraculous_matrix(const CosimplicialGroup& base, int n);
SpMat unit_inclusion_matrix(const CosimplicialGroup& base, int n);

/// Bicomplexes E^m_k with d raising m and the vertical differential
/// lowering k; d and the vertical differential anticommute.
struct Bicomplex {
  int M = 0;                  // cochain degrees 0..M
  int klo = 0, khi = 0;       // chain degrees klo..khi
  std::vector<std::vector<long>> dims;    // dims[m][k-klo]
  std::vector<std::vector<SpMat>> dh;     // dh[m][k-klo] : E^m_k -> E^{m+1}_k
  std::vector<std::vector<SpMat>> dv;     // dv[m][k-klo] : E^m_k -> E^m_{k-1}
  void check_bicomplex() const;
};

/// A small chain complex factor V (V_k, d: V_k -> V_{k-1}).
struct ChainFactor {
  std::vector<long> dims;  // degrees 0..kmax
  std::vector<SpMat> d;    // d[k] : V_{k+1} -> V_k
};

/// E^m_k = C^m (x) V_k with the nerve differential horizontally and
/// (-1)^m id (x) d_V vertically.
Bicomplex nerve_bicomplex(const CosimplicialGroup& c, const ChainFactor& v);

/// Product-total complex |E|^t = prod_{m-k=t} E^m_k on the materialized
/// window, with d(a)^{m,k} = dh(a^{m-1,k}) - dv(a^{m,k+1}).
CochainComplex totalize(const Bicomplex& e);

/// Summand classification of the free crossed extension of build_D(q):
/// the identity goes to the base summand, every other (a, sigma) to the key
/// (kappa(sigma), x) where x deletes the entries of a sitting between output
/// strands that the contraction merges.
struct SummandKey {
  bool unit = true;   // the base summand
  Perm chi;           // simple, arity >= 2
  std::vector<int> xs;
  bool operator<(const SummandKey& o) const;
  bool operator==(const SummandKey& o) const;
  std::string str() const;
};

SummandKey classify_summand(const std::vector<int>& tuple, const Perm& sigma);

struct SummandInfo {
  SummandKey key;
  std::vector<long> rank_per_degree;  // cosimplicial degrees 0..N
};

/// Per-summand ranks of free_crossed(build_D(q)) up to degree N; their sum
/// per degree equals dim D[q]^n * n!.
std::vector<SummandInfo> decompose_ranks(int q, int N);

/// Expected rank of the (chi, xs) summand in degree n from the tensor-factor
/// dimensions with the degree shift 2m+2.
long summand_rank_formula(int q, const SummandKey& key, int n);

/// The shifted tensor complex attached to a summand key, materialized so
/// that degrees <= N are honest.
CochainComplex summand_complex(int q, const SummandKey& key, int N);

/// Nerve of the extended dual as a plain complex (degree -1 piece included).
CochainComplex nerve_Dhat(int q, int N);

}  // namespace natop
