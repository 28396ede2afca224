#include "natop/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace natop {

bool Tree::operator==(const Tree& o) const {
  return kind == o.kind && label == o.label && children == o.children;
}

Tree white(int label, std::vector<Tree> children) {
  Tree t;
  t.kind = NodeKind::White;
  t.label = label;
  t.children = std::move(children);
  return t;
}

Tree black(std::vector<Tree> children) {
  Tree t;
  t.kind = NodeKind::Black;
  t.children = std::move(children);
  return t;
}

Tree special() { return Tree{}; }

Tree leg(int label) {
  Tree t;
  t.kind = NodeKind::Leg;
  t.label = label;
  return t;
}

int TreeType::ksum() const { return std::accumulate(ks.begin(), ks.end(), 0); }

bool TreeType::operator<(const TreeType& o) const {
  if (l != o.l) return l < o.l;
  return ks < o.ks;
}

std::string TreeType::str() const {
  std::string s = "(" + std::to_string(l) + ";";
  for (size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ks[i]);
  }
  return s + ")";
}

std::string tree_key(const Tree& t) {
  switch (t.kind) {
    case NodeKind::Special:
      return "S";
    case NodeKind::Leg:
      return "L" + std::to_string(t.label);
    case NodeKind::White:
    case NodeKind::Black: {
      std::string s = t.kind == NodeKind::White ? "W" + std::to_string(t.label) : "B";
      s += "(";
      for (size_t i = 0; i < t.children.size(); ++i) {
        if (i) s += ",";
        s += tree_key(t.children[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

Tree canonicalize(const Tree& t) {
  if (t.kind == NodeKind::Leg || t.kind == NodeKind::Special) return t;
  std::vector<Tree> ch;
  ch.reserve(t.children.size());
  for (const Tree& c : t.children) ch.push_back(canonicalize(c));
  if (t.kind == NodeKind::White) {
    Tree out = t;
    out.children = std::move(ch);
    return out;
  }
  // Black vertex: splice black children, drop special children.
  std::vector<Tree> flat;
  for (Tree& c : ch) {
    if (c.kind == NodeKind::Black) {
      for (Tree& g : c.children) flat.push_back(std::move(g));
    } else if (c.kind == NodeKind::Special) {
      // unit law
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return special();
  if (flat.size() == 1) return flat[0];
  return black(std::move(flat));
}

namespace {

void collect_stats(const Tree& t, std::vector<int>& white_arity, std::vector<int>& legs,
                   const Tree* parent, const TreeType& type) {
  switch (t.kind) {
    case NodeKind::Leg:
      if (!t.children.empty()) throw std::invalid_argument("tree: leg with children");
      legs.push_back(t.label);
      return;
    case NodeKind::Special:
      if (!t.children.empty()) throw std::invalid_argument("tree: special with children");
      if (parent && parent->kind != NodeKind::White)
        throw std::invalid_argument("tree: special vertex not under a white vertex");
      return;
    case NodeKind::Black:
      if (t.children.size() < 2) throw std::invalid_argument("tree: black arity < 2");
      if (parent && parent->kind == NodeKind::Black)
        throw std::invalid_argument("tree: black-black edge");
      break;
    case NodeKind::White: {
      const int n = type.n();
      if (t.label < 1 || t.label > n) throw std::invalid_argument("tree: white label range");
      if (white_arity[static_cast<size_t>(t.label) - 1] >= 0)
        throw std::invalid_argument("tree: repeated white label");
      white_arity[static_cast<size_t>(t.label) - 1] = static_cast<int>(t.children.size());
      break;
    }
  }
  for (const Tree& c : t.children) collect_stats(c, white_arity, legs, &t, type);
}

}  // namespace

void validate_tree(const Tree& t, const TreeType& type) {
  std::vector<int> white_arity(static_cast<size_t>(type.n()), -1);
  std::vector<int> legs;
  collect_stats(t, white_arity, legs, nullptr, type);
  for (int j = 0; j < type.n(); ++j)
    if (white_arity[static_cast<size_t>(j)] != type.ks[static_cast<size_t>(j)])
      throw std::invalid_argument("tree: white vertex " + std::to_string(j + 1) +
                                  " missing or of wrong arity");
  std::sort(legs.begin(), legs.end());
  if (static_cast<int>(legs.size()) != type.l)
    throw std::invalid_argument("tree: wrong number of legs");
  for (int p = 0; p < type.l; ++p)
    if (legs[static_cast<size_t>(p)] != p + 1)
      throw std::invalid_argument("tree: leg labels not a bijection");
  if (t.kind == NodeKind::Special && type.l != 0)
    throw std::invalid_argument("tree: bare special must have no legs");
}

namespace {

void infer_rec(const Tree& t, std::map<int, int>& whites, int& legs) {
  if (t.kind == NodeKind::White) whites[t.label] = static_cast<int>(t.children.size());
  if (t.kind == NodeKind::Leg) ++legs;
  for (const Tree& c : t.children) infer_rec(c, whites, legs);
}

}  // namespace

TreeType infer_type(const Tree& t) {
  std::map<int, int> whites;
  int legs = 0;
  infer_rec(t, whites, legs);
  TreeType ty;
  ty.l = legs;
  ty.ks.resize(whites.size());
  for (const auto& [label, arity] : whites) {
    if (label < 1 || label > static_cast<int>(whites.size()))
      throw std::invalid_argument("infer_type: white labels not contiguous");
    ty.ks[static_cast<size_t>(label) - 1] = arity;
  }
  validate_tree(t, ty);
  return ty;
}

void TreeSum::add(const Tree& t, long long coeff) {
  if (coeff == 0) return;
  std::string key = tree_key(t);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::make_pair(t, coeff));
  } else {
    it->second.second += coeff;
    if (it->second.second == 0) terms_.erase(it);
  }
}

void TreeSum::add_scaled(const TreeSum& other, long long coeff) {
  for (const auto& [key, tc] : other.terms()) add(tc.first, coeff * tc.second);
}

long long TreeSum::coeff(const Tree& t) const {
  auto it = terms_.find(tree_key(t));
  return it == terms_.end() ? 0 : it->second.second;
}

namespace {

Tree map_white_labels(const Tree& t, const std::function<int(int)>& f) {
  Tree out = t;
  if (out.kind == NodeKind::White) out.label = f(out.label);
  for (Tree& c : out.children) c = map_white_labels(c, f);
  return out;
}

Tree graft_legs(const Tree& t, const std::vector<Tree>& args) {
  if (t.kind == NodeKind::Leg) return args[static_cast<size_t>(t.label) - 1];
  Tree out = t;
  for (Tree& c : out.children) c = graft_legs(c, args);
  return out;
}

Tree replace_white(const Tree& node, int i, int m, const Tree& t2) {
  if (node.kind == NodeKind::White && node.label == i) {
    std::vector<Tree> args;
    args.reserve(node.children.size());
    for (const Tree& c : node.children) args.push_back(replace_white(c, i, m, t2));
    Tree shifted = map_white_labels(t2, [&](int j) { return j + i - 1; });
    return graft_legs(shifted, args);
  }
  Tree out = node;
  if (out.kind == NodeKind::White && out.label > i) out.label += m - 1;
  for (Tree& c : out.children) c = replace_white(c, i, m, t2);
  return out;
}

}  // namespace

TreeType insert_type(const TreeType& ty1, int i, const TreeType& ty2) {
  if (i < 1 || i > ty1.n()) throw std::out_of_range("insert: slot out of range");
  if (ty1.ks[static_cast<size_t>(i) - 1] != ty2.l)
    throw std::invalid_argument("insert: colour mismatch");
  TreeType out;
  out.l = ty1.l;
  out.ks.insert(out.ks.end(), ty1.ks.begin(), ty1.ks.begin() + (i - 1));
  out.ks.insert(out.ks.end(), ty2.ks.begin(), ty2.ks.end());
  out.ks.insert(out.ks.end(), ty1.ks.begin() + i, ty1.ks.end());
  return out;
}

Tree insert_tree(const Tree& t1, const TreeType& ty1, int i, const Tree& t2,
                 const TreeType& ty2) {
  if (i < 1 || i > ty1.n()) throw std::out_of_range("insert: slot out of range");
  if (ty1.ks[static_cast<size_t>(i) - 1] != ty2.l)
    throw std::invalid_argument("insert: colour mismatch");
  return canonicalize(replace_white(t1, i, ty2.n(), t2));
}

TreeSum insert_sum(const TreeSum& a, int i, const TreeSum& b) {
  TreeSum out(insert_type(a.type(), i, b.type()));
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(insert_tree(ta.first, a.type(), i, tb.first, b.type()),
              ta.second * tb.second);
  return out;
}

Tree sym_act(const Tree& t, const Perm& sigma) {
  Perm inv = inverse(sigma);
  return map_white_labels(t, [&](int j) { return inv(j); });
}

TreeType sym_act_type(const TreeType& ty, const Perm& sigma) {
  if (sigma.arity() != ty.n()) throw std::invalid_argument("sym_act: arity mismatch");
  TreeType out;
  out.l = ty.l;
  out.ks.resize(ty.ks.size());
  for (int j = 1; j <= ty.n(); ++j)
    out.ks[static_cast<size_t>(j) - 1] = ty.ks[static_cast<size_t>(sigma(j)) - 1];
  return out;
}

namespace {

void planar_legs(const Tree& t, std::vector<int>& order) {
  if (t.kind == NodeKind::Leg) order.push_back(t.label);
  for (const Tree& c : t.children) planar_legs(c, order);
}

Tree relabel_legs(const Tree& t, const std::function<int(int)>& f) {
  Tree out = t;
  if (out.kind == NodeKind::Leg) out.label = f(out.label);
  for (Tree& c : out.children) c = relabel_legs(c, f);
  return out;
}

}  // namespace

std::pair<Tree, Perm> split_labels(const Tree& t) {
  std::vector<int> order;
  planar_legs(t, order);
  // sigma(label) = planar position; this is the convention under which the
  // coboundary faces of a tree carry the strand-doubled permutations.
  Perm sigma = inverse(Perm(std::vector<int>(order)));
  Tree planar = relabel_legs(t, [&](int lab) { return sigma(lab); });
  return {planar, sigma};
}

Tree join_labels(const Tree& planar, const Perm& sigma) {
  Perm inv = inverse(sigma);
  return relabel_legs(planar, [&](int p) { return inv(p); });
}

bool has_stub(const Tree& t) {
  if (t.kind == NodeKind::Special && !t.children.empty()) return true;
  for (const Tree& c : t.children) {
    if (c.kind == NodeKind::Special) return true;
    if (has_stub(c)) return true;
  }
  return false;
}

bool is_exceptional_unit(const Tree& t) { return t.kind == NodeKind::Special; }

bool in_planar_suboperad(const Tree& t) {
  std::vector<int> order;
  planar_legs(t, order);
  for (size_t p = 0; p < order.size(); ++p)
    if (order[p] != static_cast<int>(p) + 1) return false;
  return true;
}

namespace {

struct EnumCtx {
  const TreeType* type;
  // memo key: (legmask, whitemask, black_child)
  std::map<std::tuple<unsigned, unsigned, bool>, std::vector<Tree>> memo;
};

std::vector<unsigned> submasks(unsigned mask) {
  std::vector<unsigned> out;
  unsigned s = mask;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
  return out;
}

std::vector<Tree> gen_subtrees(EnumCtx& ctx, unsigned legmask, unsigned whitemask,
                               bool black_child);

// Ordered partitions of (legmask, whitemask) into `parts` slots, each slot
// enumerated by gen_subtrees.
void gen_children(EnumCtx& ctx, unsigned legmask, unsigned whitemask, size_t parts,
                  bool black_child, bool nonempty, std::vector<Tree>& acc,
                  std::vector<std::vector<Tree>>& out) {
  if (parts == 0) {
    if (legmask == 0 && whitemask == 0) out.push_back(acc);
    return;
  }
  for (unsigned lsub : submasks(legmask))
    for (unsigned wsub : submasks(whitemask)) {
      if (nonempty && lsub == 0 && wsub == 0) continue;
      for (const Tree& t : gen_subtrees(ctx, lsub, wsub, black_child)) {
        acc.push_back(t);
        gen_children(ctx, legmask & ~lsub, whitemask & ~wsub, parts - 1, black_child,
                     nonempty, acc, out);
        acc.pop_back();
      }
    }
}

std::vector<Tree> gen_subtrees(EnumCtx& ctx, unsigned legmask, unsigned whitemask,
                               bool black_child) {
  auto key = std::make_tuple(legmask, whitemask, black_child);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;
  std::vector<Tree> out;
  const int popleg = __builtin_popcount(legmask);
  // Bare leg.
  if (popleg == 1 && whitemask == 0) {
    for (int p = 0; p < ctx.type->l; ++p)
      if (legmask & (1u << p)) out.push_back(leg(p + 1));
  }
  // Special vertex (unit); not allowed under a black vertex.
  if (!black_child && legmask == 0 && whitemask == 0) out.push_back(special());
  // White root.
  for (int w = 0; w < ctx.type->n(); ++w) {
    if (!(whitemask & (1u << w))) continue;
    const size_t k = static_cast<size_t>(ctx.type->ks[static_cast<size_t>(w)]);
    std::vector<std::vector<Tree>> childlists;
    std::vector<Tree> acc;
    gen_children(ctx, legmask, whitemask & ~(1u << w), k, /*black_child=*/false,
                 /*nonempty=*/false, acc, childlists);
    for (auto& ch : childlists) out.push_back(white(w + 1, std::move(ch)));
  }
  // Black root: at least two children, none of them black or special.
  if (!black_child && popleg + __builtin_popcount(whitemask) >= 2) {
    const size_t max_parts = static_cast<size_t>(popleg + __builtin_popcount(whitemask));
    for (size_t parts = 2; parts <= max_parts; ++parts) {
      std::vector<std::vector<Tree>> childlists;
      std::vector<Tree> acc;
      gen_children(ctx, legmask, whitemask, parts, /*black_child=*/true,
                   /*nonempty=*/true, acc, childlists);
      for (auto& ch : childlists) out.push_back(black(std::move(ch)));
    }
  }
  ctx.memo[key] = out;
  return out;
}

}  // namespace

std::vector<Tree> enumerate_basis(const TreeType& type) {
  if (type.l > 20 || type.n() > 20) throw std::invalid_argument("enumerate_basis: type too big");
  std::vector<Tree> out;
  if (type.n() == 0 && type.l == 0) {
    out.push_back(special());
    return out;
  }
  EnumCtx ctx;
  ctx.type = &type;
  const unsigned legmask = type.l >= 1 ? ((1u << type.l) - 1) : 0u;
  const unsigned whitemask = type.n() >= 1 ? ((1u << type.n()) - 1) : 0u;
  out = gen_subtrees(ctx, legmask, whitemask, false);
  // A bare special subtree is a valid whole tree only for the type (0;).
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Tree& t) {
                             return t.kind == NodeKind::Special && (type.l != 0 || type.n() != 0);
                           }),
            out.end());
  std::sort(out.begin(), out.end(),
            [](const Tree& a, const Tree& b) { return tree_key(a) < tree_key(b); });
  return out;
}

}  // namespace natop
