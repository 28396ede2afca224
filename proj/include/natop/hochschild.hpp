#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "natop/interval.hpp"
#include "natop/tree.hpp"

namespace natop {

/// A word in the generators x_1, x_2, ... of the free associative unital
/// algebra; the empty word is the unit.
using Monomial = std::vector<int>;

Monomial mono_concat(const Monomial& a, const Monomial& b);
std::string mono_str(const Monomial& m);

/// Finite integer combination of monomials.
class AlgebraElement {
public:
  AlgebraElement() = default;
  static AlgebraElement unit();
  static AlgebraElement generator(int i);
  static AlgebraElement monomial(Monomial m, long long c = 1);

  void add(const Monomial& m, long long c);
  void add_scaled(const AlgebraElement& o, long long c);
  long long coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  std::string str() const;

private:
  std::map<Monomial, long long> terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// A finite-support multilinear map on tuples of monomials; zero outside the
/// table.
struct SymbolicCochain {
  int arity = 0;
  std::map<std::vector<Monomial>, AlgebraElement> table;

  AlgebraElement operator()(const std::vector<Monomial>& args) const;
};

/// Decorate white vertex i by fs[i-1], black vertices by the multiplication,
/// special vertices by the unit, legs by args, and compose along the tree.
/// Multilinear in every slot.
AlgebraElement evaluate(const Tree& t, const TreeType& type,
                        const std::vector<SymbolicCochain>& fs,
                        const std::vector<AlgebraElement>& args);
AlgebraElement evaluate(const TreeSum& ts, const std::vector<SymbolicCochain>& fs,
                        const std::vector<AlgebraElement>& args);

/// Separating cochains for a tree: f_i has single-point support with fresh
/// value x_{l+i}, and the whole tree evaluates on (x_1..x_l) to the target
/// monomial with coefficient 1.
struct SeparatingWitness {
  std::vector<SymbolicCochain> fs;
  std::vector<int> value_of;  // value_of[i-1] = generator index of f_i's value
  Monomial target;
};

SeparatingWitness build_separating_witness(const Tree& t, const TreeType& type);

/// The standard generic arguments (x_1, ..., x_l).
std::vector<AlgebraElement> generator_args(int l);

/// True iff evaluating every basis tree S of the type against every basis
/// tree T's witness gives the Kronecker delta at T's target monomial.
bool genericity_check(const TreeType& type);

/// The crossed-interval action on bar-construction tensors:
/// position i of the output is the ordered product of the inputs in the
/// fiber over i (empty fiber = unit).  tensor has length src+3, result
/// dst+3.
std::vector<AlgebraElement> bar_action(const IntervalMorphism& g,
                                       const std::vector<AlgebraElement>& tensor);

/// The Hochschild coboundary of an arity-k multilinear map, evaluated at
/// monomial arguments:
///   (dF)(u_1..u_{k+1}) = u_1 F(u_2..) + sum_i (-1)^i F(.., u_i u_{i+1}, ..)
///                        + (-1)^{k+1} F(..u_k) u_{k+1}.
using MultilinearFn = std::function<AlgebraElement(const std::vector<Monomial>&)>;
AlgebraElement hochschild_coboundary(const MultilinearFn& f, int arity,
                                     const std::vector<Monomial>& args);

/// evaluate() with the cochain at white vertex `slot` replaced by an
/// arbitrary multilinear map of arity type.ks[slot-1].
AlgebraElement evaluate_override(const Tree& t, const TreeType& type,
                                 const std::vector<SymbolicCochain>& fs,
                                 const std::vector<AlgebraElement>& args, int slot,
                                 const MultilinearFn& fn);

}  // namespace natop
