#include "natop/hochschild.hpp"

#include <stdexcept>

namespace natop {

Monomial mono_concat(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string mono_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += "*";
    s += "x" + std::to_string(m[i]);
  }
  return s;
}

AlgebraElement AlgebraElement::unit() { return monomial(Monomial{}); }

AlgebraElement AlgebraElement::generator(int i) { return monomial(Monomial{i}); }

AlgebraElement AlgebraElement::monomial(Monomial m, long long c) {
  AlgebraElement e;
  e.add(m, c);
  return e;
}

void AlgebraElement::add(const Monomial& m, long long c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgebraElement::add_scaled(const AlgebraElement& o, long long c) {
  for (const auto& [m, v] : o.terms_) add(m, c * v);
}

long long AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*" + mono_str(m);
  }
  return s;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add(mono_concat(ma, mb), ca * cb);
  return out;
}

AlgebraElement SymbolicCochain::operator()(const std::vector<Monomial>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("SymbolicCochain: arity mismatch");
  auto it = table.find(args);
  return it == table.end() ? AlgebraElement() : it->second;
}

namespace {

// Multilinear expansion of a white vertex: iterate over the support of each
// child value, apply the map to the resulting monomial tuple.
AlgebraElement apply_multilinear(const MultilinearFn& f,
                                 const std::vector<AlgebraElement>& inputs) {
  AlgebraElement out;
  std::vector<Monomial> mons(inputs.size());
  std::function<void(size_t, long long)> rec = [&](size_t idx, long long coeff) {
    if (idx == inputs.size()) {
      out.add_scaled(f(mons), coeff);
      return;
    }
    for (const auto& [m, c] : inputs[idx].terms()) {
      mons[idx] = m;
      rec(idx + 1, coeff * c);
    }
  };
  rec(0, 1);
  return out;
}

AlgebraElement eval_rec(const Tree& t, const std::vector<SymbolicCochain>& fs,
                        const std::vector<AlgebraElement>& args, int slot,
                        const MultilinearFn* fn) {
  switch (t.kind) {
    case NodeKind::Leg:
      return args[static_cast<size_t>(t.label) - 1];
    case NodeKind::Special:
      return AlgebraElement::unit();
    case NodeKind::Black: {
      AlgebraElement acc = AlgebraElement::unit();
      for (const Tree& c : t.children) acc = multiply(acc, eval_rec(c, fs, args, slot, fn));
      return acc;
    }
    case NodeKind::White: {
      std::vector<AlgebraElement> inputs;
      inputs.reserve(t.children.size());
      for (const Tree& c : t.children) inputs.push_back(eval_rec(c, fs, args, slot, fn));
      if (fn && t.label == slot) return apply_multilinear(*fn, inputs);
      const SymbolicCochain& f = fs[static_cast<size_t>(t.label) - 1];
      return apply_multilinear([&f](const std::vector<Monomial>& m) { return f(m); },
                               inputs);
    }
  }
  return AlgebraElement();
}

}  // namespace

AlgebraElement evaluate(const Tree& t, const TreeType& type,
                        const std::vector<SymbolicCochain>& fs,
                        const std::vector<AlgebraElement>& args) {
  if (static_cast<int>(fs.size()) != type.n())
    throw std::invalid_argument("evaluate: wrong number of cochains");
  for (int j = 0; j < type.n(); ++j)
    if (fs[static_cast<size_t>(j)].arity != type.ks[static_cast<size_t>(j)])
      throw std::invalid_argument("evaluate: cochain arity mismatch");
  if (static_cast<int>(args.size()) != type.l)
    throw std::invalid_argument("evaluate: wrong number of arguments");
  return eval_rec(t, fs, args, 0, nullptr);
}

AlgebraElement evaluate_override(const Tree& t, const TreeType& type,
                                 const std::vector<SymbolicCochain>& fs,
                                 const std::vector<AlgebraElement>& args, int slot,
                                 const MultilinearFn& fn) {
  if (static_cast<int>(args.size()) != type.l)
    throw std::invalid_argument("evaluate_override: wrong number of arguments");
  return eval_rec(t, fs, args, slot, &fn);
}

AlgebraElement evaluate(const TreeSum& ts, const std::vector<SymbolicCochain>& fs,
                        const std::vector<AlgebraElement>& args) {
  AlgebraElement out;
  for (const auto& [key, tc] : ts.terms()) {
    AlgebraElement e = evaluate(tc.first, ts.type(), fs, args);
    out.add_scaled(e, tc.second);
  }
  return out;
}

namespace {

// Replace every function symbol by its value: white i |-> x_{l+i},
// leg p |-> x_p, special |-> 1, black |-> concatenation.
Monomial value_monomial(const Tree& t, int l) {
  switch (t.kind) {
    case NodeKind::Leg:
      return Monomial{t.label};
    case NodeKind::Special:
      return Monomial{};
    case NodeKind::White:
      return Monomial{l + t.label};
    case NodeKind::Black: {
      Monomial out;
      for (const Tree& c : t.children) {
        Monomial cm = value_monomial(c, l);
        out.insert(out.end(), cm.begin(), cm.end());
      }
      return out;
    }
  }
  return {};
}

void collect_tables(const Tree& t, int l, SeparatingWitness& w) {
  if (t.kind == NodeKind::White) {
    std::vector<Monomial> key;
    key.reserve(t.children.size());
    for (const Tree& c : t.children) key.push_back(value_monomial(c, l));
    auto& f = w.fs[static_cast<size_t>(t.label) - 1];
    f.table[key] = AlgebraElement::generator(l + t.label);
  }
  for (const Tree& c : t.children) collect_tables(c, l, w);
}

}  // namespace

SeparatingWitness build_separating_witness(const Tree& t, const TreeType& type) {
  validate_tree(t, type);
  SeparatingWitness w;
  w.fs.resize(static_cast<size_t>(type.n()));
  w.value_of.resize(static_cast<size_t>(type.n()));
  for (int i = 1; i <= type.n(); ++i) {
    w.fs[static_cast<size_t>(i) - 1].arity = type.ks[static_cast<size_t>(i) - 1];
    w.value_of[static_cast<size_t>(i) - 1] = type.l + i;
  }
  collect_tables(t, type.l, w);
  w.target = value_monomial(t, type.l);
  return w;
}

std::vector<AlgebraElement> generator_args(int l) {
  std::vector<AlgebraElement> args;
  args.reserve(static_cast<size_t>(l));
  for (int p = 1; p <= l; ++p) args.push_back(AlgebraElement::generator(p));
  return args;
}

bool genericity_check(const TreeType& type) {
  const std::vector<Tree> basis = enumerate_basis(type);
  const std::vector<AlgebraElement> args = generator_args(type.l);
  for (const Tree& t : basis) {
    SeparatingWitness w = build_separating_witness(t, type);
    for (const Tree& s : basis) {
      long long c = evaluate(s, type, w.fs, args).coefficient(w.target);
      if (c != ((tree_key(s) == tree_key(t)) ? 1 : 0)) return false;
    }
  }
  return true;
}

std::vector<AlgebraElement> bar_action(const IntervalMorphism& g,
                                       const std::vector<AlgebraElement>& tensor) {
  if (static_cast<int>(tensor.size()) != g.src() + 3)
    throw std::invalid_argument("bar_action: tensor length mismatch");
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<size_t>(g.dst()) + 3);
  for (int i = -1; i <= g.dst() + 1; ++i) {
    AlgebraElement acc = AlgebraElement::unit();
    for (int x : g.fiber(i)) acc = multiply(acc, tensor[static_cast<size_t>(x) + 1]);
    out.push_back(std::move(acc));
  }
  return out;
}

AlgebraElement hochschild_coboundary(const MultilinearFn& f, int arity,
                                     const std::vector<Monomial>& args) {
  if (static_cast<int>(args.size()) != arity + 1)
    throw std::invalid_argument("hochschild_coboundary: need arity+1 arguments");
  AlgebraElement out;
  {  // i = 0: left multiplication
    std::vector<Monomial> rest(args.begin() + 1, args.end());
    AlgebraElement v = multiply(AlgebraElement::monomial(args.front()), f(rest));
    out.add_scaled(v, 1);
  }
  for (int i = 1; i <= arity; ++i) {
    std::vector<Monomial> merged;
    merged.reserve(static_cast<size_t>(arity));
    for (int j = 0; j < i - 1; ++j) merged.push_back(args[static_cast<size_t>(j)]);
    merged.push_back(mono_concat(args[static_cast<size_t>(i) - 1], args[static_cast<size_t>(i)]));
    for (int j = i + 1; j <= arity; ++j) merged.push_back(args[static_cast<size_t>(j)]);
    out.add_scaled(f(merged), (i % 2 == 0) ? 1 : -1);
  }
  {  // i = arity + 1: right multiplication
    std::vector<Monomial> rest(args.begin(), args.end() - 1);
    AlgebraElement v = multiply(f(rest), AlgebraElement::monomial(args.back()));
    out.add_scaled(v, (arity + 1) % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace natop
