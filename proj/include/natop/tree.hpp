#pragma once

#include <map>
#include <string>
#include <vector>

#include "natop/perm.hpp"

namespace natop {

enum class NodeKind { White, Black, Special, Leg };

/// A node of a planar rooted tree.  White vertices carry a label 1..n and
/// have fixed arity, black vertices (arity >= 2) stand for the iterated
/// multiplication, special vertices (arity 0) for the unit, legs for the
/// inputs.  The exceptional trees are a bare Leg (the identity cochain) and
/// a bare Special (the unit cochain).
struct Tree {
  NodeKind kind = NodeKind::Special;
  int label = 0;  // white: 1..n, leg: 1..l
  std::vector<Tree> children;

  bool operator==(const Tree& o) const;
};

Tree white(int label, std::vector<Tree> children = {});
Tree black(std::vector<Tree> children);
Tree special();
Tree leg(int label);

/// Output colour l and input colours (k_1..k_n).
struct TreeType {
  int l = 0;
  std::vector<int> ks;

  int n() const { return static_cast<int>(ks.size()); }
  int ksum() const;
  int degree() const { return l - ksum(); }

  bool operator==(const TreeType& o) const { return l == o.l && ks == o.ks; }
  bool operator!=(const TreeType& o) const { return !(*this == o); }
  bool operator<(const TreeType& o) const;
  std::string str() const;
};

/// Canonical preorder serialization; TreeSum keys and basis indexing use it.
std::string tree_key(const Tree& t);

/// Rewrite to normal form: collapse black-black edges, delete special
/// children of black vertices, splice out arity-1 black vertices and turn
/// arity-0 black vertices into specials.
Tree canonicalize(const Tree& t);

/// Throws std::invalid_argument when t is not a canonical tree of the type.
void validate_tree(const Tree& t, const TreeType& type);

/// Type of a canonical tree (white labels must be 1..n, legs 1..l).
TreeType infer_type(const Tree& t);

/// An integer combination of canonical trees of one homogeneous type.
class TreeSum {
public:
  TreeSum() = default;
  explicit TreeSum(TreeType type) : type_(std::move(type)) {}

  const TreeType& type() const { return type_; }
  void add(const Tree& t, long long coeff);
  void add_scaled(const TreeSum& other, long long coeff);
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<std::string, std::pair<Tree, long long>>& terms() const { return terms_; }
  long long coeff(const Tree& t) const;

private:
  TreeType type_;
  std::map<std::string, std::pair<Tree, long long>> terms_;
};

/// Vertex insertion: replace the white vertex labelled i of t1 by t2,
/// grafting the i-th slot's subtrees onto the legs of t2, relabelling the
/// white vertices, and canonicalizing.  Requires ty2.l == ty1.ks[i-1].
Tree insert_tree(const Tree& t1, const TreeType& ty1, int i, const Tree& t2,
                 const TreeType& ty2);
TreeType insert_type(const TreeType& ty1, int i, const TreeType& ty2);
TreeSum insert_sum(const TreeSum& a, int i, const TreeSum& b);

/// Right action of sigma in S_n on white labels: the vertex labelled
/// sigma(j) in t becomes labelled j, so the colour list is permuted to
/// ks'[j] = ks[sigma(j)].
Tree sym_act(const Tree& t, const Perm& sigma);
TreeType sym_act_type(const TreeType& ty, const Perm& sigma);

/// Legs in planar (counterclockwise) order.  Returns the label-stripped tree
/// (legs renumbered 1..l in planar order) and the permutation sending each
/// label to its planar position; with this convention the coboundary faces
/// act on the permutation part by strand doubling.
std::pair<Tree, Perm> split_labels(const Tree& t);
/// Inverse of split_labels.
Tree join_labels(const Tree& planar, const Perm& sigma);

bool has_stub(const Tree& t);
bool is_exceptional_unit(const Tree& t);  // the bare special tree
/// Membership in the planar suboperad: leg labels increase counterclockwise.
bool in_planar_suboperad(const Tree& t);

/// All canonical trees of the given type, sorted by tree_key.
std::vector<Tree> enumerate_basis(const TreeType& type);

}  // namespace natop
