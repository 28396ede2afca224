#include "natop/operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace natop {

Tree realize_interval(const IntervalMorphism& g) {
  const int l = g.src() + 1;
  const int k = g.dst() + 1;
  auto legs_of_fiber = [&](int i) {
    std::vector<Tree> out;
    for (int x : g.fiber(i))
      if (x >= 0 && x <= l - 1) out.push_back(leg(x + 1));
    return out;
  };
  std::vector<Tree> inputs;
  inputs.reserve(static_cast<size_t>(k));
  for (int i = 0; i <= k - 1; ++i) inputs.push_back(black(legs_of_fiber(i)));
  Tree w = white(1, std::move(inputs));
  std::vector<Tree> root_children = legs_of_fiber(-1);
  root_children.push_back(std::move(w));
  for (Tree& t : legs_of_fiber(k)) root_children.push_back(std::move(t));
  return canonicalize(black(std::move(root_children)));
}

TreeType realize_type(const IntervalMorphism& g) {
  return TreeType{g.src() + 1, {g.dst() + 1}};
}

Tree generator_coface(int l, int i) {
  return realize_interval(interval_coface(l, i));
}

Tree generator_codegeneracy(int k, int i) {
  return realize_interval(interval_codegeneracy(k - 1, i));
}

bool SignConvention::operator==(const SignConvention& o) const {
  return e0 == o.e0 && e1 == o.e1 && e2 == o.e2 && c0 == o.c0 && c1 == o.c1 &&
         c2 == o.c2 && c3 == o.c3 && comp_koszul == o.comp_koszul;
}

std::string SignConvention::str() const {
  return "delta:i+" + std::to_string(e0) + "+" + std::to_string(e1) + "l+" +
         std::to_string(e2) + "K del:i+" + std::to_string(c0) + "+" + std::to_string(c1) +
         "l+" + std::to_string(c2) + "K+" + std::to_string(c3) + "kap koszul:" +
         (comp_koszul ? "1" : "0");
}

SignConvention chosen_convention() { return SignConvention{}; }

namespace {

long long pow_sign(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

TreeSum delta_part(const Tree& t, const TreeType& ty, const SignConvention& conv) {
  TreeSum out(TreeType{ty.l + 1, ty.ks});
  const TreeType fty{ty.l + 1, {ty.l}};
  for (int i = 0; i <= ty.l + 1; ++i) {
    long long s = pow_sign(i + conv.e0 + conv.e1 * ty.l + conv.e2 * ty.ksum());
    out.add(insert_tree(generator_coface(ty.l, i), fty, 1, t, ty), s);
  }
  return out;
}

TreeSum del_part(const Tree& t, const TreeType& ty, int j, const SignConvention& conv) {
  if (j < 1 || j > ty.n()) throw std::out_of_range("del_part: slot");
  const int kj = ty.ks[static_cast<size_t>(j) - 1];
  TreeType outty = ty;
  outty.ks[static_cast<size_t>(j) - 1] = kj - 1;
  TreeSum out(outty);
  if (kj == 0) return out;  // no faces below simplicial degree 0
  int kappa = 0;
  for (int m = 0; m < j - 1; ++m) kappa += ty.ks[static_cast<size_t>(m)];
  const TreeType ety{kj, {kj - 1}};
  for (int i = 0; i <= kj; ++i) {
    long long s = pow_sign(i + conv.c0 + conv.c1 * ty.l + conv.c2 * ty.ksum() +
                           conv.c3 * kappa);
    out.add(insert_tree(t, ty, j, generator_coface(kj - 1, i), ety), s);
  }
  return out;
}

std::map<TreeType, TreeSum> differential(const Tree& t, const TreeType& ty,
                                         const SignConvention& conv, int l_cut) {
  std::map<TreeType, TreeSum> out;
  if (l_cut < 0 || ty.l + 1 <= l_cut) {
    TreeSum d = delta_part(t, ty, conv);
    if (!d.is_zero()) out.emplace(d.type(), std::move(d));
  }
  for (int j = 1; j <= ty.n(); ++j) {
    TreeSum p = del_part(t, ty, j, conv);
    if (p.is_zero()) continue;
    auto it = out.find(p.type());
    if (it == out.end())
      out.emplace(p.type(), [&] {
        TreeSum s(p.type());
        s.add_scaled(p, -1);
        return s;
      }());
    else
      it->second.add_scaled(p, -1);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<TreeType, TreeSum> differential(const TreeSum& ts, const SignConvention& conv,
                                         int l_cut) {
  std::map<TreeType, TreeSum> out;
  for (const auto& [key, tc] : ts.terms()) {
    for (auto& [ty, sum] : differential(tc.first, ts.type(), conv, l_cut)) {
      auto it = out.find(ty);
      if (it == out.end()) it = out.emplace(ty, TreeSum(ty)).first;
      it->second.add_scaled(sum, tc.second);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::pair<Tree, long long> compose_graded(const Tree& t1, const TreeType& ty1, int i,
                                          const Tree& t2, const TreeType& ty2,
                                          const SignConvention& conv) {
  long long s = 1;
  if (conv.comp_koszul) {
    int kappa = 0;
    for (int m = 0; m < i - 1; ++m) kappa += ty1.ks[static_cast<size_t>(m)];
    s = pow_sign(static_cast<long long>(ty2.degree()) * kappa);
  }
  return {insert_tree(t1, ty1, i, t2, ty2), s};
}

TreeSum compose_graded(const TreeSum& a, int i, const TreeSum& b,
                       const SignConvention& conv) {
  TreeSum out(insert_type(a.type(), i, b.type()));
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms()) {
      auto [t, s] = compose_graded(ta.first, a.type(), i, tb.first, b.type(), conv);
      out.add(t, s * ta.second * tb.second);
    }
  return out;
}

Suboperad suboperad_from_string(const std::string& s) {
  if (s == "B") return Suboperad::B;
  if (s == "Bhat") return Suboperad::Bhat;
  if (s == "NormB") return Suboperad::NormB;
  throw std::invalid_argument("unknown suboperad: " + s);
}

std::string suboperad_name(Suboperad s) {
  switch (s) {
    case Suboperad::B: return "B";
    case Suboperad::Bhat: return "Bhat";
    case Suboperad::NormB: return "NormB";
  }
  return "?";
}

bool suboperad_member(const Tree& t, Suboperad sub) {
  switch (sub) {
    case Suboperad::B:
      return true;
    case Suboperad::Bhat:
      return !has_stub(t) && !is_exceptional_unit(t);
    case Suboperad::NormB:
      return !has_stub(t);
  }
  return false;
}

long TruncatedComponent::dim(int degree) const {
  if (degree < lo || degree > hi()) return 0;
  return static_cast<long>(basis[static_cast<size_t>(degree - lo)].size());
}

namespace {

void compositions_rec(int n, int rest, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (int v = 0; v <= rest; ++v) {
    acc.push_back(v);
    compositions_rec(n - 1, rest - v, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  compositions_rec(n, max_sum, acc, out);
  return out;
}

}  // namespace

TruncatedComponent truncated_complex(int n, int K, int L, Suboperad sub,
                                     const SignConvention& conv) {
  TruncatedComponent tc;
  tc.n = n;
  tc.K = K;
  tc.L = L;
  tc.sub = sub;
  tc.conv = conv;
  tc.lo = -K;
  tc.basis.assign(static_cast<size_t>(K + L + 1), {});
  std::map<std::pair<std::string, std::string>, std::pair<int, long>> index;
  for (const auto& ks : compositions(n, K)) {
    for (int l = 0; l <= L; ++l) {
      TreeType ty{l, ks};
      const int deg = ty.degree();
      auto& row = tc.basis[static_cast<size_t>(deg - tc.lo)];
      for (const Tree& t : enumerate_basis(ty)) {
        if (!suboperad_member(t, sub)) continue;
        index[{ty.str(), tree_key(t)}] = {deg, static_cast<long>(row.size())};
        row.emplace_back(ty, t);
      }
    }
  }
  tc.d.resize(tc.basis.size() - 1);
  for (size_t di = 0; di + 1 < tc.basis.size(); ++di)
    tc.d[di] = SpMat(static_cast<long>(tc.basis[di + 1].size()),
                     static_cast<long>(tc.basis[di].size()));
  for (size_t di = 0; di < tc.basis.size(); ++di) {
    const auto& row = tc.basis[di];
    for (size_t col = 0; col < row.size(); ++col) {
      const auto& [ty, t] = row[col];
      for (const auto& [oty, sum] : differential(t, ty, conv, L)) {
        for (const auto& [key, term] : sum.terms()) {
          if (sub == Suboperad::NormB && has_stub(term.first)) continue;
          auto it = index.find({oty.str(), tree_key(term.first)});
          // The truncation is closed: the l-cut was applied by differential()
          // and the suboperads are stable under d after the NormB projection.
          if (it == index.end()) throw std::logic_error("truncation not closed");
          if (di + 1 >= tc.basis.size()) throw std::logic_error("degree overflow");
          tc.d[di].add(it->second.second, static_cast<long>(col), term.second);
        }
      }
    }
  }
  for (auto& m : tc.d) m.finalize();
  return tc;
}

RowComplex row_complex(int k, int L, const SignConvention& conv) {
  RowComplex rc;
  rc.k = k;
  rc.L = L;
  rc.basis.resize(static_cast<size_t>(L) + 1);
  std::vector<std::map<std::string, long>> index(static_cast<size_t>(L) + 1);
  for (int l = 0; l <= L; ++l) {
    rc.basis[static_cast<size_t>(l)] = enumerate_basis(TreeType{l, {k}});
    long i = 0;
    for (const Tree& t : rc.basis[static_cast<size_t>(l)])
      index[static_cast<size_t>(l)][tree_key(t)] = i++;
  }
  rc.d.resize(static_cast<size_t>(L));
  for (int l = 0; l < L; ++l) {
    SpMat m(static_cast<long>(rc.basis[static_cast<size_t>(l) + 1].size()),
            static_cast<long>(rc.basis[static_cast<size_t>(l)].size()));
    const TreeType ty{l, {k}};
    long col = 0;
    for (const Tree& t : rc.basis[static_cast<size_t>(l)]) {
      TreeSum sum = delta_part(t, ty, conv);
      for (const auto& [key, term] : sum.terms())
        m.add(index[static_cast<size_t>(l) + 1].at(key), col, term.second);
      ++col;
    }
    m.finalize();
    rc.d[static_cast<size_t>(l)] = std::move(m);
  }
  return rc;
}

Tree cup_generator(int k, int l) {
  std::vector<Tree> ch1, ch2;
  for (int p = 1; p <= k; ++p) ch1.push_back(leg(p));
  for (int p = k + 1; p <= k + l; ++p) ch2.push_back(leg(p));
  return canonicalize(black({white(1, std::move(ch1)), white(2, std::move(ch2))}));
}

TreeSum brace_generator(int k, const std::vector<int>& ms) {
  const int n = static_cast<int>(ms.size()) + 1;
  TreeType ty;
  ty.ks.push_back(k);
  for (int m : ms) ty.ks.push_back(m);
  int msum = 0;
  for (int m : ms) msum += m;
  ty.l = k - (n - 1) + msum;
  TreeSum out(ty);
  if (k < n - 1) return out;  // no substitutions
  // Choose slots 1 <= p_2 < ... < p_n <= k for g_2..g_n.
  std::vector<int> pos(static_cast<size_t>(n) - 1);
  std::function<void(int, int)> rec = [&](int idx, int from) {
    if (idx == n - 1) {
      // Build the tree and its sign.
      std::vector<Tree> children;
      int next_leg = 1;
      long long eps = 0;
      int placed = 0;  // how many g's are placed so far
      int inputs_before = 0;
      for (int slot = 1; slot <= k; ++slot) {
        if (placed < n - 1 && pos[static_cast<size_t>(placed)] == slot) {
          const int m = ms[static_cast<size_t>(placed)];
          eps += static_cast<long long>(m - 1) * inputs_before;
          std::vector<Tree> gch;
          for (int p = 0; p < m; ++p) gch.push_back(leg(next_leg++));
          children.push_back(white(2 + placed, std::move(gch)));
          inputs_before += m;
          ++placed;
        } else {
          children.push_back(leg(next_leg++));
          inputs_before += 1;
        }
      }
      out.add(canonicalize(white(1, std::move(children))), pow_sign(eps));
      return;
    }
    for (int p = from; p <= k; ++p) {
      pos[static_cast<size_t>(idx)] = p;
      rec(idx + 1, p + 1);
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace natop
