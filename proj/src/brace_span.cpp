#include "natop/brace_span.hpp"

#include <algorithm>
#include <stdexcept>

namespace natop {

SpanElement cup_span() {
  SpanElement e;
  e.name = "cup";
  e.arity = 2;
  e.degree = 0;
  e.component = [](const std::vector<int>& ks) {
    TreeType ty{ks[0] + ks[1], ks};
    TreeSum out(ty);
    out.add(cup_generator(ks[0], ks[1]), 1);
    return out;
  };
  return e;
}

namespace {

long long sgn_of(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

SpanElement brace_span(int r) {
  SpanElement e;
  e.name = "br" + std::to_string(r);
  e.arity = r;
  e.degree = -(r - 1);
  e.component = [r](const std::vector<int>& ks) {
    TreeSum raw = brace_generator(ks[0], std::vector<int>(ks.begin() + 1, ks.end()));
    // Regrading prefactor: each inserted argument moves past the shifted
    // degrees of the first input and of the earlier insertions; without it
    // the coboundary does not stay in the span with colour-independent
    // coefficients.
    long long lam = 0;
    long long shifted_before = ks[0] - 1;
    for (size_t j = 1; j < ks.size(); ++j) {
      lam += static_cast<long long>(ks[j]) * shifted_before;
      shifted_before += ks[j] - 1;
    }
    TreeSum out(raw.type());
    out.add_scaled(raw, sgn_of(lam));
    return out;
  };
  return e;
}

SpanElement compose_span(const SpanElement& a, int i, const SpanElement& b,
                         const SignConvention& conv) {
  SpanElement e;
  e.name = a.name + "o" + std::to_string(i) + "(" + b.name + ")";
  e.arity = a.arity + b.arity - 1;
  e.degree = a.degree + b.degree;
  const SpanElement acopy = a;
  const SpanElement bcopy = b;
  e.component = [acopy, bcopy, i, conv](const std::vector<int>& ks) -> TreeSum {
    std::vector<int> bk(ks.begin() + (i - 1), ks.begin() + (i - 1) + bcopy.arity);
    int lb = bcopy.degree;
    for (int k : bk) lb += k;
    std::vector<int> ak(ks.begin(), ks.begin() + (i - 1));
    ak.push_back(lb);
    ak.insert(ak.end(), ks.begin() + (i - 1) + bcopy.arity, ks.end());
    TreeType zero_ty{0, ks};
    if (lb < 0) return TreeSum(zero_ty);
    TreeSum ta = acopy.component(ak);
    TreeSum tb = bcopy.component(bk);
    if (ta.is_zero() || tb.is_zero()) {
      TreeType ty{ta.type().l, ks};
      return TreeSum(ty);
    }
    return compose_graded(ta, i, tb, conv);
  };
  return e;
}

SpanElement twist_span(const SpanElement& a, const Perm& sigma) {
  SpanElement e;
  e.name = a.name + "*" + sigma.str();
  e.arity = a.arity;
  e.degree = a.degree;
  const SpanElement acopy = a;
  const Perm inv = inverse(sigma);
  e.component = [acopy, sigma, inv](const std::vector<int>& ks) {
    std::vector<int> old(ks.size());
    for (int i = 1; i <= static_cast<int>(ks.size()); ++i)
      old[static_cast<size_t>(i) - 1] = ks[static_cast<size_t>(inv(i)) - 1];
    TreeSum src = acopy.component(old);
    // Koszul sign of reordering the graded inputs.
    long long eps = 0;
    const int n = sigma.arity();
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q)
        if (sigma(p) > sigma(q))
          eps += static_cast<long long>(old[static_cast<size_t>(sigma(p)) - 1]) *
                 old[static_cast<size_t>(sigma(q)) - 1];
    TreeSum out(sym_act_type(src.type(), sigma));
    for (const auto& [key, tc] : src.terms())
      out.add(sym_act(tc.first, sigma), sgn_of(eps) * tc.second);
    return out;
  };
  return e;
}

std::map<int, std::vector<SpanElement>> brace_words(int n, const SignConvention& conv) {
  std::map<int, std::vector<SpanElement>> out;
  std::vector<SpanElement> raw;
  if (n == 2) {
    raw.push_back(cup_span());
    raw.push_back(brace_span(2));
  } else if (n == 3) {
    const SpanElement cup = cup_span();
    const SpanElement br2 = brace_span(2);
    raw.push_back(compose_span(cup, 1, cup, conv));
    raw.push_back(compose_span(cup, 2, cup, conv));
    raw.push_back(compose_span(cup, 1, br2, conv));
    raw.push_back(compose_span(cup, 2, br2, conv));
    raw.push_back(compose_span(br2, 1, cup, conv));
    raw.push_back(compose_span(br2, 2, cup, conv));
    raw.push_back(compose_span(br2, 1, br2, conv));
    raw.push_back(compose_span(br2, 2, br2, conv));
    raw.push_back(brace_span(3));
  } else {
    throw std::invalid_argument("brace_words: arity not supported");
  }
  for (const SpanElement& e : raw)
    for (const Perm& s : all_perms(n)) out[e.degree].push_back(twist_span(e, s));
  return out;
}

namespace {

using SVec = std::map<long, Int>;

struct CoordRegistry {
  std::map<std::pair<std::string, std::string>, long> index;
  std::vector<int> colour_sum;

  long at(const TreeType& ty, const std::string& key) {
    auto it = index.find({ty.str(), key});
    if (it != index.end()) return it->second;
    long id = static_cast<long>(colour_sum.size());
    index.emplace(std::make_pair(ty.str(), key), id);
    colour_sum.push_back(ty.ksum());
    return id;
  }
};

void tuples_rec(int n, int rest, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (int v = 0; v <= rest; ++v) {
    acc.push_back(v);
    tuples_rec(n - 1, rest - v, acc, out);
    acc.pop_back();
  }
}

// Echelon lattice basis with word-space bookkeeping.
struct Lattice {
  struct Row {
    long pivot;
    SVec v;
    std::vector<Int> u;  // coefficients over the word list
  };
  std::vector<Row> rows;  // sorted by pivot

  static void axpy(SVec& a, const Int& c, const SVec& b) {
    if (c == 0) return;
    for (const auto& [i, x] : b) {
      Int nv = (a.count(i) ? a[i] : Int(0)) + c * x;
      if (nv == 0)
        a.erase(i);
      else
        a[i] = std::move(nv);
    }
  }
  static void axpy_u(std::vector<Int>& a, const Int& c, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
  }

  void insert(SVec v, std::vector<Int> u) {
    while (!v.empty()) {
      const long p = v.begin()->first;
      auto it = std::lower_bound(rows.begin(), rows.end(), p,
                                 [](const Row& r, long q) { return r.pivot < q; });
      if (it == rows.end() || it->pivot != p) {
        rows.insert(it, Row{p, std::move(v), std::move(u)});
        return;
      }
      Int a = it->v.begin()->second;
      Int b = v.begin()->second;
      if (b % a == 0) {
        Int q = -b / a;
        axpy(v, q, it->v);
        axpy_u(u, q, it->u);
        continue;
      }
      // gcd step: replace the stored row by the gcd combination, continue
      // with the reduced remainder.
      Int g = boost::multiprecision::gcd(a, b);
      // x*a + y*b = g
      Int x0, y0;
      {
        Int s0 = 1, s1 = 0, t0 = 0, t1 = 1, r0 = a, r1 = b;
        while (r1 != 0) {
          Int q = r0 / r1;
          Int r2 = r0 - q * r1;
          Int s2 = s0 - q * s1;
          Int t2 = t0 - q * t1;
          r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        x0 = s0; y0 = t0;
      }
      SVec comb;
      axpy(comb, x0, it->v);
      axpy(comb, y0, v);
      std::vector<Int> comb_u(u.size(), Int(0));
      axpy_u(comb_u, x0, it->u);
      axpy_u(comb_u, y0, u);
      // remainder with pivot eliminated
      Int qa = -(b / g);
      Int qb = a / g;
      SVec rem;
      axpy(rem, qb, v);
      axpy(rem, qa, it->v);
      std::vector<Int> rem_u(u.size(), Int(0));
      axpy_u(rem_u, qb, u);
      axpy_u(rem_u, qa, it->u);
      it->v = std::move(comb);
      it->u = std::move(comb_u);
      v = std::move(rem);
      u = std::move(rem_u);
    }
  }

  // Express target in the lattice; returns false if impossible.
  bool solve(SVec target, std::vector<Int>& coeffs_out) const {
    coeffs_out.assign(rows.size(), Int(0));
    while (!target.empty()) {
      const long p = target.begin()->first;
      auto it = std::lower_bound(rows.begin(), rows.end(), p,
                                 [](const Row& r, long q) { return r.pivot < q; });
      if (it == rows.end() || it->pivot != p) return false;
      const Int& lead = it->v.begin()->second;
      if (target.begin()->second % lead != 0) return false;
      Int q = -(target.begin()->second / lead);
      axpy(target, q, it->v);
      coeffs_out[static_cast<size_t>(it - rows.begin())] = -q;
    }
    return true;
  }
};

}  // namespace

BraceHomologyResult brace_suboperad_homology(int n, int S, const SignConvention& conv) {
  BraceHomologyResult res;
  res.n = n;
  res.S = S;
  auto words = brace_words(n, conv);
  std::vector<std::vector<int>> tuples;
  {
    std::vector<int> acc;
    tuples_rec(n, S, acc, tuples);
  }
  CoordRegistry reg;
  auto vec_of = [&](const SpanElement& e, bool subwindow) {
    SVec v;
    for (const auto& ks : tuples) {
      int ksum = 0;
      for (int k : ks) ksum += k;
      if (subwindow && ksum > S - 1) continue;
      TreeSum ts = e.component(ks);
      for (const auto& [key, tc] : ts.terms())
        v[reg.at(ts.type(), key)] += tc.second;
    }
    return v;
  };
  auto dvec_of = [&](const SpanElement& e) {
    // d of the full (sum <= S) vector, restricted to sum <= S-1.
    SVec v;
    for (const auto& ks : tuples) {
      TreeSum ts = e.component(ks);
      if (ts.is_zero()) continue;
      for (const auto& [oty, osum] : differential(ts, conv)) {
        if (oty.ksum() > S - 1) continue;
        for (const auto& [key, tc] : osum.terms()) v[reg.at(oty, key)] += tc.second;
      }
    }
    return v;
  };

  // Lattice per degree and the d-vectors of the raw words.
  std::map<int, Lattice> lattice;
  std::map<int, std::vector<SVec>> dvecs;
  for (auto& [deg, ws] : words) {
    Lattice lat;
    for (size_t i = 0; i < ws.size(); ++i) {
      std::vector<Int> u(ws.size(), Int(0));
      u[i] = 1;
      lat.insert(vec_of(ws[i], true), std::move(u));
      dvecs[deg].push_back(dvec_of(ws[i]));
    }
    res.span_rank[deg] = static_cast<long>(lat.rows.size());
    lattice[deg] = std::move(lat);
  }

  // d-matrix in the lattice bases; degree deg -> deg+1.
  std::map<int, SpMat> dmat;
  for (auto& [deg, lat] : lattice) {
    const auto itup = lattice.find(deg + 1);
    const long target_rank =
        itup == lattice.end() ? 0 : static_cast<long>(itup->second.rows.size());
    SpMat m(target_rank, static_cast<long>(lat.rows.size()));
    for (size_t j = 0; j < lat.rows.size(); ++j) {
      // d(basis row) = sum_w u_w * d(word_w)
      SVec dv;
      const auto& u = lat.rows[j].u;
      for (size_t w = 0; w < u.size(); ++w)
        if (u[w] != 0) {
          if (u[w] < std::numeric_limits<long long>::min() ||
              u[w] > std::numeric_limits<long long>::max())
            throw std::overflow_error("brace span: coefficient overflow");
          Lattice::axpy(dv, u[w], dvecs[deg][w]);
        }
      if (dv.empty()) continue;
      if (itup == lattice.end()) {
        res.closed = false;
        throw std::logic_error("brace suboperad: d leaves the span (no target degree)");
      }
      std::vector<Int> coeffs;
      if (!itup->second.solve(dv, coeffs)) {
        res.closed = false;
        throw std::logic_error("brace suboperad: d leaves the span");
      }
      for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) {
          if (coeffs[i] < std::numeric_limits<long long>::min() ||
              coeffs[i] > std::numeric_limits<long long>::max())
            throw std::overflow_error("brace span: matrix entry overflow");
          m.add(static_cast<long>(i), static_cast<long>(j),
                static_cast<long long>(coeffs[i]));
        }
    }
    m.finalize();
    dmat[deg] = std::move(m);
  }

  // Homology from the small complex  ... -> deg -> deg+1 -> ...
  std::map<int, SnfResult> snf;
  for (auto& [deg, m] : dmat) snf[deg] = smith_normal_form(m);
  for (auto& [deg, lat] : lattice) {
    HomologySummary h;
    const long rank_out = snf.count(deg) ? snf[deg].rank : 0;
    const long rank_in = snf.count(deg - 1) ? snf[deg - 1].rank : 0;
    h.betti = static_cast<long>(lat.rows.size()) - rank_out - rank_in;
    if (snf.count(deg - 1)) h.torsion = snf[deg - 1].torsion;
    res.homology[deg] = std::move(h);
  }
  return res;
}

}  // namespace natop
