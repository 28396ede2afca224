// Batch front end: enumeration, differentials, homology of truncations,
// the verification suites, and machine-readable exports.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "natop/brace_span.hpp"
#include "natop/complexes.hpp"
#include "natop/json_io.hpp"
#include "natop/operad.hpp"
#include "natop/verify.hpp"

namespace {

using natop::json;

struct Options {
  int n = 1;
  int K = 2;
  int L = 3;
  int q = 1;
  int N = 4;
  std::string suboperad = "B";
  std::string out;
  uint64_t seed = 2024;
};

void write_output(const std::string& path, const json& j) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << j.dump(2) << "\n";
}

natop::CochainComplex as_complex(const natop::TruncatedComponent& tc) {
  natop::CochainComplex c;
  c.lo = tc.lo;
  for (const auto& b : tc.basis) c.dims.push_back(static_cast<long>(b.size()));
  c.d = tc.d;
  return c;
}

int cmd_enumerate(const Options& opt, const std::string& type_str) {
  json table = json::array();
  if (!type_str.empty()) {
    // parse "(l;k1,k2,...)"
    natop::TreeType ty;
    std::string s = type_str;
    if (s.front() == '(') s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    ty.l = std::stoi(s.substr(0, semi));
    std::string rest = s.substr(semi + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      if (comma > pos) ty.ks.push_back(std::stoi(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    json row;
    row["type"] = ty.str();
    row["count"] = natop::enumerate_basis(ty).size();
    table.push_back(std::move(row));
  } else {
    for (int l = 0; l <= opt.L; ++l) {
      std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& ks, int n,
                                                                 int rest) {
        if (n == 0) {
          natop::TreeType ty{l, ks};
          json row;
          row["type"] = ty.str();
          row["count"] = natop::enumerate_basis(ty).size();
          table.push_back(std::move(row));
          return;
        }
        for (int v = 0; v <= rest; ++v) {
          ks.push_back(v);
          rec(ks, n - 1, rest - v);
          ks.pop_back();
        }
      };
      std::vector<int> ks;
      rec(ks, opt.n, opt.K);
    }
  }
  write_output(opt.out, table);
  return 0;
}

int cmd_diff(const Options& opt, const std::string& input) {
  json in;
  if (input.empty() || input == "-") {
    std::cin >> in;
  } else {
    std::ifstream is(input);
    if (!is) throw std::runtime_error("cannot open input: " + input);
    is >> in;
  }
  natop::TreeSum ts = natop::tree_sum_from_json(in);
  json out = json::object();
  for (const auto& [ty, sum] : natop::differential(ts, natop::chosen_convention())) {
    out[ty.str()] = natop::to_json(sum);
  }
  write_output(opt.out, out);
  return 0;
}

int cmd_homology(const Options& opt, int row_k) {
  json out;
  const natop::SignConvention conv = natop::chosen_convention();
  if (row_k >= 0) {
    // cosimplicial row at arity 1: fixed input colour, raising direction only
    out["row"] = row_k;
    out["L"] = opt.L;
    json hom = json::object();
    for (int L : {opt.L - 1, opt.L}) {
      natop::RowComplex rc = natop::row_complex(row_k, L, conv);
      natop::CochainComplex c;
      c.lo = 0;
      for (auto& b : rc.basis) c.dims.push_back(static_cast<long>(b.size()));
      c.d = rc.d;
      auto h = natop::homology(c, 0, L - 2);
      for (auto& [deg, v] : h) {
        json row;
        row["betti"] = v.betti;
        json tor = json::array();
        for (const auto& t : v.torsion) tor.push_back(t.str());
        row["torsion"] = std::move(tor);
        if (L == opt.L) {
          row["stable"] = hom.contains(std::to_string(deg)) &&
                          hom[std::to_string(deg)]["betti"] == v.betti;
          hom[std::to_string(deg)] = std::move(row);
        } else {
          hom[std::to_string(deg)] = std::move(row);
        }
      }
    }
    out["homology"] = std::move(hom);
    write_output(opt.out, out);
    return 0;
  }
  out["n"] = opt.n;
  out["K"] = opt.K;
  out["L"] = opt.L;
  out["suboperad"] = opt.suboperad;
  if (opt.suboperad == "Brhat") {
    natop::BraceHomologyResult cur = natop::brace_suboperad_homology(opt.n, opt.K, conv);
    natop::BraceHomologyResult prev = natop::brace_suboperad_homology(opt.n, opt.K - 1, conv);
    json hom = json::object();
    bool stable = true;
    for (auto& [deg, h] : cur.homology) {
      json row;
      row["betti"] = h.betti;
      json tor = json::array();
      for (const auto& t : h.torsion) tor.push_back(t.str());
      row["torsion"] = std::move(tor);
      bool st = prev.homology.count(deg) && prev.homology.at(deg) == h;
      row["stable"] = st;
      stable = stable && st;
      hom[std::to_string(deg)] = std::move(row);
    }
    out["homology"] = std::move(hom);
    out["stable"] = stable;
    write_output(opt.out, out);
    return 0;
  }
  const natop::Suboperad sub = natop::suboperad_from_string(opt.suboperad);
  natop::CochainComplex cur = as_complex(natop::truncated_complex(opt.n, opt.K, opt.L, sub, conv));
  natop::CochainComplex prev = as_complex(natop::truncated_complex(
      opt.n, std::max(0, opt.K - 1), std::max(0, opt.L - 1), sub, conv));
  const int lo = cur.lo + 1;
  const int hi = cur.hi() - 1;
  if (lo > hi) throw std::runtime_error("window empty");
  auto h = natop::homology(cur, lo, hi);
  auto hp = natop::homology(prev, std::max(prev.lo + 1, lo), std::min(prev.hi() - 1, hi));
  json hom = json::object();
  for (auto& [deg, v] : h) {
    json row;
    row["betti"] = v.betti;
    json tor = json::array();
    for (const auto& t : v.torsion) tor.push_back(t.str());
    row["torsion"] = std::move(tor);
    row["stable"] = hp.count(deg) && hp.at(deg) == v;
    hom[std::to_string(deg)] = std::move(row);
  }
  out["homology"] = std::move(hom);
  write_output(opt.out, out);
  return 0;
}

int cmd_verify(const Options& opt, const std::string& suite) {
  if (!natop::is_suite(suite)) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  natop::SuiteResult r = natop::run_suite(suite, opt.seed);
  json out;
  out["suite"] = r.suite;
  out["seed"] = opt.seed;
  out["seconds"] = r.seconds;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    if (!c.details.empty()) row["details"] = c.details;
    checks.push_back(std::move(row));
    std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << (c.details.empty() || c.pass ? "" : " -- " + c.details) << "\n";
  }
  out["checks"] = std::move(checks);
  out["pass"] = r.pass();
  write_output(opt.out, out);
  return r.pass() ? 0 : 1;
}

int cmd_export(const Options& opt, const std::string& what) {
  const natop::SignConvention conv = natop::chosen_convention();
  if (what == "D") {
    write_output(opt.out, natop::to_json(natop::nerve(natop::build_D(opt.q, opt.N))));
  } else if (what == "Dhat") {
    write_output(opt.out, natop::to_json(natop::nerve_Dhat(opt.q, opt.N)));
  } else if (what == "FD") {
    write_output(opt.out,
                 natop::to_json(natop::nerve(natop::free_crossed(natop::build_D(opt.q, opt.N)))));
  } else if (what == "B") {
    write_output(opt.out,
                 natop::to_json(natop::truncated_complex(
                     opt.n, opt.K, opt.L, natop::suboperad_from_string(opt.suboperad), conv)));
  } else if (what == "sample-tree") {
    natop::Tree t = natop::black(
        {natop::leg(3),
         natop::white(1, {natop::white(2, {natop::black({natop::leg(5), natop::leg(6)}),
                                           natop::special(), natop::leg(8)}),
                          natop::leg(1), natop::white(3, {natop::leg(7)})}),
         natop::white(4, {natop::leg(4), natop::special(), natop::leg(2)})});
    write_output(opt.out, natop::to_json(natop::canonicalize(t)));
  } else if (what == "sample-witness") {
    natop::Tree t = natop::black(
        {natop::leg(3),
         natop::white(1, {natop::white(2, {natop::black({natop::leg(5), natop::leg(6)}),
                                           natop::special(), natop::leg(8)}),
                          natop::leg(1), natop::white(3, {natop::leg(7)})}),
         natop::white(4, {natop::leg(4), natop::special(), natop::leg(2)})});
    t = natop::canonicalize(t);
    write_output(opt.out, natop::to_json(natop::build_separating_witness(t, natop::infer_type(t))));
  } else if (what == "decomposition") {
    json out = json::object();
    for (const auto& info : natop::decompose_ranks(opt.q, opt.N)) {
      json row;
      row["ranks"] = info.rank_per_degree;
      out[info.key.str()] = std::move(row);
    }
    write_output(opt.out, out);
  } else {
    std::cerr << "unknown export selector: " << what << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the operads of natural operations on Hochschild complexes"};
  app.require_subcommand(1);
  Options opt;

  std::string type_str, suite = "all", what = "D", input;

  CLI::App* enumerate = app.add_subcommand("enumerate", "tree counts per component");
  enumerate->add_option("--type", type_str, "single component, e.g. (2;1,1)");
  enumerate->add_option("--n", opt.n);
  enumerate->add_option("--K", opt.K);
  enumerate->add_option("--L", opt.L);
  enumerate->add_option("--out", opt.out);

  CLI::App* diff = app.add_subcommand("diff", "differential of a tree sum (json)");
  diff->add_option("--in", input, "input file, - for stdin");
  diff->add_option("--out", opt.out);

  int row_k = -1;
  CLI::App* homology = app.add_subcommand("homology", "homology of a truncated component");
  homology->add_option("--n", opt.n);
  homology->add_option("--K", opt.K);
  homology->add_option("--L", opt.L);
  homology->add_option("--suboperad", opt.suboperad, "B | Bhat | NormB | Brhat");
  homology->add_option("--row", row_k, "row mode: fixed input colour, raising direction only");
  homology->add_option("--out", opt.out);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'");
  verify->add_option("--seed", opt.seed);
  verify->add_option("--out", opt.out);

  CLI::App* exp = app.add_subcommand("export", "machine-readable exports");
  exp->add_option("what", what, "D | Dhat | FD | B | decomposition | sample-tree | sample-witness");
  exp->add_option("--q", opt.q);
  exp->add_option("--N", opt.N);
  exp->add_option("--n", opt.n);
  exp->add_option("--K", opt.K);
  exp->add_option("--L", opt.L);
  exp->add_option("--suboperad", opt.suboperad);
  exp->add_option("--out", opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(opt, type_str);
    if (diff->parsed()) return cmd_diff(opt, input);
    if (homology->parsed()) return cmd_homology(opt, row_k);
    if (verify->parsed()) return cmd_verify(opt, suite);
    if (exp->parsed()) return cmd_export(opt, what);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
