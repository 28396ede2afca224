#include "natop/json_io.hpp"

#include <stdexcept>

namespace natop {

json to_json(const Perm& p) { return json(p.images()); }

Perm perm_from_json(const json& j) { return Perm(j.get<std::vector<int>>()); }

json to_json(const IntervalMorphism& f) {
  json out;
  out["src"] = f.src();
  out["dst"] = f.dst();
  out["map"] = f.map_points();
  json fibers = json::object();
  for (int i = -1; i <= f.dst() + 1; ++i) fibers[std::to_string(i)] = f.fiber(i);
  out["fibers"] = std::move(fibers);
  return out;
}

IntervalMorphism interval_from_json(const json& j) {
  const int src = j.at("src").get<int>();
  const int dst = j.at("dst").get<int>();
  std::vector<int> map = j.at("map").get<std::vector<int>>();
  std::vector<std::vector<int>> fibers(static_cast<size_t>(dst) + 3);
  for (int i = -1; i <= dst + 1; ++i)
    fibers[static_cast<size_t>(i) + 1] =
        j.at("fibers").at(std::to_string(i)).get<std::vector<int>>();
  return IntervalMorphism(src, dst, std::move(map), std::move(fibers));
}

json to_json(const Tree& t) {
  json out;
  switch (t.kind) {
    case NodeKind::White: out["kind"] = "white"; out["label"] = t.label; break;
    case NodeKind::Black: out["kind"] = "black"; break;
    case NodeKind::Special: out["kind"] = "special"; break;
    case NodeKind::Leg: out["kind"] = "leg"; out["label"] = t.label; break;
  }
  if (t.kind == NodeKind::White || t.kind == NodeKind::Black) {
    json ch = json::array();
    for (const Tree& c : t.children) ch.push_back(to_json(c));
    out["children"] = std::move(ch);
  }
  return out;
}

Tree tree_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "special") return special();
  if (kind == "leg") return leg(j.at("label").get<int>());
  std::vector<Tree> ch;
  if (j.contains("children"))
    for (const json& c : j.at("children")) ch.push_back(tree_from_json(c));
  if (kind == "black") return black(std::move(ch));
  if (kind == "white") return white(j.at("label").get<int>(), std::move(ch));
  throw std::invalid_argument("tree_from_json: unknown kind " + kind);
}

json to_json(const TreeSum& ts) {
  json out = json::array();
  for (const auto& [key, tc] : ts.terms()) {
    json term;
    term["coeff"] = tc.second;
    term["tree"] = to_json(tc.first);
    out.push_back(std::move(term));
  }
  return out;
}

TreeSum tree_sum_from_json(const json& j) {
  TreeSum out;
  bool first = true;
  for (const json& term : j) {
    Tree t = tree_from_json(term.at("tree"));
    if (first) {
      out = TreeSum(infer_type(t));
      first = false;
    }
    out.add(t, term.at("coeff").get<long long>());
  }
  return out;
}

json to_json(const SpMat& m) {
  json out;
  out["rows"] = m.rows;
  out["cols"] = m.cols;
  json entries = json::array();
  for (long c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.cols_[static_cast<size_t>(c)])
      entries.push_back(json::array({r, c, v}));
  out["entries"] = std::move(entries);
  return out;
}

SpMat spmat_from_json(const json& j) {
  SpMat m(j.at("rows").get<long>(), j.at("cols").get<long>());
  for (const json& e : j.at("entries"))
    m.add(e.at(0).get<long>(), e.at(1).get<long>(), e.at(2).get<long long>());
  m.finalize();
  return m;
}

json to_json(const CochainComplex& c) {
  json out = json::object();
  for (int t = c.lo; t <= c.hi(); ++t) {
    json deg;
    if (!c.labels.empty() &&
        static_cast<size_t>(t - c.lo) < c.labels.size() &&
        !c.labels[static_cast<size_t>(t - c.lo)].empty())
      deg["basis"] = c.labels[static_cast<size_t>(t - c.lo)];
    else
      deg["basis"] = c.dim(t);
    if (const SpMat* d = c.diff(t)) deg["boundary"] = to_json(*d);
    out[std::to_string(t)] = std::move(deg);
  }
  return out;
}

json to_json(const TruncatedComponent& tc) {
  json out;
  out["n"] = tc.n;
  out["K"] = tc.K;
  out["L"] = tc.L;
  out["suboperad"] = suboperad_name(tc.sub);
  json degrees = json::object();
  for (int t = tc.lo; t <= tc.hi(); ++t) {
    json deg;
    json basis = json::array();
    for (const auto& [ty, tree] : tc.basis[static_cast<size_t>(t - tc.lo)]) {
      json b;
      b["type"] = ty.str();
      b["tree"] = to_json(tree);
      basis.push_back(std::move(b));
    }
    deg["basis"] = std::move(basis);
    if (t < tc.hi()) deg["boundary"] = to_json(tc.d[static_cast<size_t>(t - tc.lo)]);
    degrees[std::to_string(t)] = std::move(deg);
  }
  out["degrees"] = std::move(degrees);
  return out;
}

json to_json(const Monomial& m) { return json(m); }

json to_json(const SeparatingWitness& w) {
  json out;
  out["values"] = w.value_of;
  json tables = json::array();
  for (const SymbolicCochain& f : w.fs) {
    json table = json::array();
    for (const auto& [key, val] : f.table) {
      json entry;
      json args = json::array();
      for (const Monomial& m : key) args.push_back(to_json(m));
      entry["args"] = std::move(args);
      json terms = json::array();
      for (const auto& [m, c] : val.terms())
        terms.push_back(json{{"coeff", c}, {"monomial", to_json(m)}});
      entry["value"] = std::move(terms);
      table.push_back(std::move(entry));
    }
    tables.push_back(std::move(table));
  }
  out["table"] = std::move(tables);
  out["target"] = to_json(w.target);
  return out;
}

}  // namespace natop
