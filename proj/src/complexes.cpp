#include "natop/complexes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace natop {

long CochainComplex::dim(int degree) const {
  if (degree < lo || degree > hi()) return 0;
  return dims[static_cast<size_t>(degree - lo)];
}

const SpMat* CochainComplex::diff(int degree) const {
  int idx = degree - lo;
  if (idx < 0 || idx >= static_cast<int>(d.size())) return nullptr;
  return &d[static_cast<size_t>(idx)];
}

void CochainComplex::check_complex() const {
  for (size_t i = 0; i + 1 < d.size(); ++i)
    if (!multiply(d[i + 1], d[i]).is_zero())
      throw std::logic_error("CochainComplex: d o d != 0 at degree " +
                             std::to_string(lo + static_cast<int>(i)));
}

std::string HomologySummary::str() const {
  std::string s = "Z^" + std::to_string(betti);
  for (const Int& t : torsion) s += " + Z/" + t.str();
  return s;
}

std::map<int, HomologySummary> homology(const CochainComplex& c, int deg_lo, int deg_hi) {
  std::map<int, SnfResult> snf_cache;
  auto snf_at = [&](int degree) -> const SnfResult& {
    auto it = snf_cache.find(degree);
    if (it != snf_cache.end()) return it->second;
    const SpMat* m = c.diff(degree);
    SnfResult r = m ? smith_normal_form(*m) : SnfResult{};
    return snf_cache.emplace(degree, std::move(r)).first->second;
  };
  std::map<int, HomologySummary> out;
  for (int t = deg_lo; t <= deg_hi; ++t) {
    HomologySummary h;
    h.betti = c.dim(t) - snf_at(t).rank - snf_at(t - 1).rank;
    h.torsion = snf_at(t - 1).torsion;
    out[t] = std::move(h);
  }
  return out;
}

CochainComplex tensor(const CochainComplex& a, const CochainComplex& b) {
  CochainComplex c;
  c.lo = a.lo + b.lo;
  const int chi = a.hi() + b.hi();
  c.dims.assign(static_cast<size_t>(chi - c.lo + 1), 0);
  // Block offsets: degree t, blocks indexed by the a-degree p ascending.
  auto block_offset = [&](int t, int p) {
    long off = 0;
    for (int pp = a.lo; pp < p; ++pp) off += a.dim(pp) * b.dim(t - pp);
    return off;
  };
  for (int t = c.lo; t <= chi; ++t) {
    long total = 0;
    for (int p = a.lo; p <= a.hi(); ++p) total += a.dim(p) * b.dim(t - p);
    c.dims[static_cast<size_t>(t - c.lo)] = total;
  }
  c.d.resize(c.dims.size() > 0 ? c.dims.size() - 1 : 0);
  for (int t = c.lo; t < chi; ++t) {
    SpMat m(c.dims[static_cast<size_t>(t + 1 - c.lo)], c.dims[static_cast<size_t>(t - c.lo)]);
    for (int p = a.lo; p <= a.hi(); ++p) {
      const int q = t - p;
      if (b.dim(q) == 0 || a.dim(p) == 0) continue;
      const long off = block_offset(t, p);
      const long bq = b.dim(q);
      // dx (x) y : block (p+1, q)
      if (const SpMat* da = a.diff(p)) {
        const long off2 = block_offset(t + 1, p + 1);
        for (long col = 0; col < da->cols; ++col)
          for (const auto& [row, v] : da->cols_[static_cast<size_t>(col)])
            for (long j = 0; j < bq; ++j)
              m.add(off2 + row * bq + j, off + col * bq + j, v);
      }
      // (-1)^p x (x) dy : block (p, q+1)
      if (const SpMat* db = b.diff(q)) {
        const long off2 = block_offset(t + 1, p);
        const long bq2 = b.dim(q + 1);
        const long long sg = (p % 2 == 0) ? 1 : -1;
        for (long col = 0; col < db->cols; ++col)
          for (const auto& [row, v] : db->cols_[static_cast<size_t>(col)])
            for (long i = 0; i < a.dim(p); ++i)
              m.add(off2 + i * bq2 + row, off + i * bq + col, sg * v);
      }
    }
    m.finalize();
    c.d[static_cast<size_t>(t - c.lo)] = std::move(m);
  }
  return c;
}

CochainComplex shift(CochainComplex c, int s) {
  c.lo += s;
  return c;
}

namespace {

void check_one_identity(const SpMat& lhs, const SpMat& rhs, const char* what) {
  if (!equal(lhs, rhs)) throw std::logic_error(std::string("cosimplicial identity: ") + what);
}

}  // namespace

void CosimplicialGroup::check_identities() const {
  // d^j d^i = d^i d^{j-1}, i < j.
  for (int n = 2; n <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        check_one_identity(
            multiply(cofaces[static_cast<size_t>(n)][static_cast<size_t>(j)],
                     cofaces[static_cast<size_t>(n) - 1][static_cast<size_t>(i)]),
            multiply(cofaces[static_cast<size_t>(n)][static_cast<size_t>(i)],
                     cofaces[static_cast<size_t>(n) - 1][static_cast<size_t>(j) - 1]),
            "dd");
  // s^i s^j = s^{j-1} s^i, i < j, as maps C^{n+2} -> C^n.
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 0; i < j && i <= n; ++i)
        check_one_identity(
            multiply(codegens[static_cast<size_t>(n)][static_cast<size_t>(i)],
                     codegens[static_cast<size_t>(n) + 1][static_cast<size_t>(j)]),
            multiply(codegens[static_cast<size_t>(n)][static_cast<size_t>(j) - 1],
                     codegens[static_cast<size_t>(n) + 1][static_cast<size_t>(i)]),
            "ss");
  // Mixed identities as maps C^n -> C^n or C^{n-1} -> C^{n+1}.
  for (int n = 1; n <= N; ++n) {
    for (int j = 0; j <= n - 1; ++j) {
      for (int i = 0; i <= n; ++i) {
        const SpMat sd = multiply(codegens[static_cast<size_t>(n) - 1][static_cast<size_t>(j)],
                                  cofaces[static_cast<size_t>(n)][static_cast<size_t>(i)]);
        if (i == j || i == j + 1) {
          check_one_identity(sd, SpMat::identity(dims[static_cast<size_t>(n) - 1]), "sd=id");
        } else if (i < j) {
          if (n - 2 >= 0)
            check_one_identity(
                sd, multiply(cofaces[static_cast<size_t>(n) - 1][static_cast<size_t>(i)],
                             codegens[static_cast<size_t>(n) - 2][static_cast<size_t>(j) - 1]),
                "sd<");
        } else {
          if (n - 2 >= 0)
            check_one_identity(
                sd, multiply(cofaces[static_cast<size_t>(n) - 1][static_cast<size_t>(i) - 1],
                             codegens[static_cast<size_t>(n) - 2][static_cast<size_t>(j)]),
                "sd>");
        }
      }
    }
  }
}

namespace {

void tuples_rec(int q, int len, int from, std::vector<int>& acc,
                std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(acc);
    return;
  }
  for (int v = from; v <= q; ++v) {
    acc.push_back(v);
    tuples_rec(q, len - 1, v, acc, out);
    acc.pop_back();
  }
}

std::string tuple_label(const std::vector<int>& t) {
  std::string s = "<";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ">";
}

}  // namespace

std::vector<std::vector<int>> d_tuples(int q, int n) {
  std::vector<std::vector<int>> out;
  if (n < -1) return out;
  std::vector<int> acc;
  if (n == -1) {
    out.push_back(acc);
    return out;
  }
  tuples_rec(q, n + 1, 0, acc, out);
  return out;
}

long dim_D(int q, int n) {
  if (n == -1) return 1;
  if (n < -1) return 0;
  // C(q+n+1, n+1)
  long r = 1;
  for (int i = 1; i <= n + 1; ++i) r = r * (q + i) / i;
  return r;
}

CosimplicialGroup build_D(int q, int N) {
  CosimplicialGroup c;
  c.N = N;
  c.dims.resize(static_cast<size_t>(N) + 1);
  c.labels.resize(static_cast<size_t>(N) + 1);
  std::vector<std::map<std::vector<int>, long>> index(static_cast<size_t>(N) + 1);
  std::vector<std::vector<std::vector<int>>> basis(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    basis[static_cast<size_t>(n)] = d_tuples(q, n);
    c.dims[static_cast<size_t>(n)] = static_cast<long>(basis[static_cast<size_t>(n)].size());
    long i = 0;
    for (const auto& t : basis[static_cast<size_t>(n)]) {
      index[static_cast<size_t>(n)][t] = i++;
      c.labels[static_cast<size_t>(n)].push_back(tuple_label(t));
    }
  }
  c.cofaces.resize(static_cast<size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    auto& row = c.cofaces[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1,
               SpMat(c.dims[static_cast<size_t>(n)], c.dims[static_cast<size_t>(n) - 1]));
    for (long col = 0; col < c.dims[static_cast<size_t>(n) - 1]; ++col) {
      const auto& a = basis[static_cast<size_t>(n) - 1][static_cast<size_t>(col)];
      const int len = n;  // entries a_0..a_{n-1}
      for (int i = 0; i <= n; ++i) {
        const int lo_s = (i - 1 >= 0) ? a[static_cast<size_t>(i) - 1] : 0;
        const int hi_s = (i <= len - 1) ? a[static_cast<size_t>(i)] : q;
        for (int s = lo_s; s <= hi_s; ++s) {
          std::vector<int> b = a;
          b.insert(b.begin() + i, s);
          row[static_cast<size_t>(i)].add(index[static_cast<size_t>(n)].at(b), col, 1);
        }
      }
    }
    for (auto& m : row) m.finalize();
  }
  c.codegens.resize(static_cast<size_t>(N));
  for (int n = 0; n + 1 <= N; ++n) {
    auto& row = c.codegens[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1,
               SpMat(c.dims[static_cast<size_t>(n)], c.dims[static_cast<size_t>(n) + 1]));
    for (long col = 0; col < c.dims[static_cast<size_t>(n) + 1]; ++col) {
      const auto& b = basis[static_cast<size_t>(n) + 1][static_cast<size_t>(col)];
      for (int i = 0; i <= n; ++i) {
        if (b[static_cast<size_t>(i)] != b[static_cast<size_t>(i) + 1]) continue;
        std::vector<int> a = b;
        a.erase(a.begin() + i + 1);
        row[static_cast<size_t>(i)].add(index[static_cast<size_t>(n)].at(a), col, 1);
      }
    }
    for (auto& m : row) m.finalize();
  }
  return c;
}

CosimplicialGroup build_Dhat(int q, int N) {
  CosimplicialGroup c = build_D(q, N);
  c.augmented = true;
  c.aug_dim = 1;
  c.aug_d0 = SpMat(c.dims[0], 1);
  for (long s = 0; s <= q; ++s) c.aug_d0.add(s, 0, 1);
  c.aug_d0.finalize();
  return c;
}

CosimplicialGroup free_crossed(const CosimplicialGroup& c) {
  if (c.augmented) throw std::invalid_argument("free_crossed: augmented input unsupported");
  CosimplicialGroup f;
  f.N = c.N;
  f.dims.resize(static_cast<size_t>(c.N) + 1);
  f.labels.resize(static_cast<size_t>(c.N) + 1);
  std::vector<std::vector<Perm>> perms(static_cast<size_t>(c.N) + 1);
  for (int n = 0; n <= c.N; ++n) {
    perms[static_cast<size_t>(n)] = all_perms(n);
    f.dims[static_cast<size_t>(n)] =
        c.dims[static_cast<size_t>(n)] * static_cast<long>(perms[static_cast<size_t>(n)].size());
    if (!c.labels.empty() && !c.labels[static_cast<size_t>(n)].empty()) {
      for (const Perm& s : perms[static_cast<size_t>(n)])
        for (long x = 0; x < c.dims[static_cast<size_t>(n)]; ++x)
          f.labels[static_cast<size_t>(n)].push_back(
              "(" + c.labels[static_cast<size_t>(n)][static_cast<size_t>(x)] + "|" + s.str() + ")");
    }
  }
  f.cofaces.resize(static_cast<size_t>(c.N) + 1);
  for (int n = 1; n <= c.N; ++n) {
    auto& row = f.cofaces[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1,
               SpMat(f.dims[static_cast<size_t>(n)], f.dims[static_cast<size_t>(n) - 1]));
    const long cd_src = c.dims[static_cast<size_t>(n) - 1];
    const long cd_dst = c.dims[static_cast<size_t>(n)];
    for (const Perm& h : perms[static_cast<size_t>(n) - 1]) {
      const long hr = perm_rank(h);
      for (int i = 0; i <= n; ++i) {
        const auto [bi, dh] = std::pair<int, Perm>{bar_index(h, i), coface(h, i)};
        const long tr = perm_rank(dh);
        const SpMat& base = c.cofaces[static_cast<size_t>(n)][static_cast<size_t>(bi)];
        for (long x = 0; x < cd_src; ++x)
          for (const auto& [y, v] : base.cols_[static_cast<size_t>(x)])
            row[static_cast<size_t>(i)].add(tr * cd_dst + y, hr * cd_src + x, v);
      }
    }
    for (auto& m : row) m.finalize();
  }
  f.codegens.resize(static_cast<size_t>(c.N));
  for (int n = 0; n + 1 <= c.N; ++n) {
    auto& row = f.codegens[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1,
               SpMat(f.dims[static_cast<size_t>(n)], f.dims[static_cast<size_t>(n) + 1]));
    const long cd_src = c.dims[static_cast<size_t>(n) + 1];
    const long cd_dst = c.dims[static_cast<size_t>(n)];
    for (const Perm& h : perms[static_cast<size_t>(n) + 1]) {
      const long hr = perm_rank(h);
      for (int i = 0; i <= n; ++i) {
        const int ui = under_index(h, i);
        const Perm sh = codegeneracy(h, i);
        const long tr = perm_rank(sh);
        const SpMat& base = c.codegens[static_cast<size_t>(n)][static_cast<size_t>(ui)];
        for (long x = 0; x < cd_src; ++x)
          for (const auto& [y, v] : base.cols_[static_cast<size_t>(x)])
            row[static_cast<size_t>(i)].add(tr * cd_dst + y, hr * cd_src + x, v);
      }
    }
    for (auto& m : row) m.finalize();
  }
  return f;
}

CochainComplex nerve(const CosimplicialGroup& c) {
  CochainComplex out;
  out.lo = c.augmented ? -1 : 0;
  if (c.augmented) out.dims.push_back(c.aug_dim);
  for (long d : c.dims) out.dims.push_back(d);
  out.labels = c.labels;
  if (c.augmented) {
    std::vector<std::vector<std::string>> lab;
    lab.push_back({"<>"});
    lab.insert(lab.end(), c.labels.begin(), c.labels.end());
    out.labels = std::move(lab);
  }
  if (c.augmented) {
    SpMat m = c.aug_d0;
    // degree -1 differential: sign (-1)^{0 + (-1)} = -1
    SpMat neg(m.rows, m.cols);
    for (long col = 0; col < m.cols; ++col)
      for (const auto& [r, v] : m.cols_[static_cast<size_t>(col)]) neg.add(r, col, -v);
    neg.finalize();
    out.d.push_back(std::move(neg));
  }
  for (int m = 0; m < c.N; ++m) {
    SpMat dm(c.dims[static_cast<size_t>(m) + 1], c.dims[static_cast<size_t>(m)]);
    for (int i = 0; i <= m + 1; ++i) {
      const long long sg = ((i + m) % 2 == 0) ? 1 : -1;
      const SpMat& f = c.cofaces[static_cast<size_t>(m) + 1][static_cast<size_t>(i)];
      for (long col = 0; col < f.cols; ++col)
        for (const auto& [r, v] : f.cols_[static_cast<size_t>(col)]) dm.add(r, col, sg * v);
    }
    dm.finalize();
    out.d.push_back(std::move(dm));
  }
  return out;
}

SpMat miraculous_matrix(const CosimplicialGroup& base, int n) {
  const long cd = base.dims[static_cast<size_t>(n)];
  const std::vector<Perm> perms = all_perms(n);
  SpMat m(cd, cd * static_cast<long>(perms.size()));
  for (const Perm& s : perms) {
    const long r = perm_rank(s);
    const long long sg = sign(s);
    for (long x = 0; x < cd; ++x) m.add(x, r * cd + x, sg);
  }
  m.finalize();
  return m;
}

SpMat unit_inclusion_matrix(const CosimplicialGroup& base, int n) {
  const long cd = base.dims[static_cast<size_t>(n)];
  const long r = perm_rank(Perm::identity(n));
  SpMat m(cd * factorial(n), cd);
  for (long x = 0; x < cd; ++x) m.add(r * cd + x, x, 1);
  m.finalize();
  return m;
}

void Bicomplex::check_bicomplex() const {
  auto at = [&](const std::vector<std::vector<SpMat>>& a, int m, int k) -> const SpMat& {
    return a[static_cast<size_t>(m)][static_cast<size_t>(k - klo)];
  };
  for (int m = 0; m <= M; ++m)
    for (int k = klo; k <= khi; ++k) {
      if (m + 2 <= M && !multiply(at(dh, m + 1, k), at(dh, m, k)).is_zero())
        throw std::logic_error("bicomplex: dh^2 != 0");
      if (k - 2 >= klo && !multiply(at(dv, m, k - 1), at(dv, m, k)).is_zero())
        throw std::logic_error("bicomplex: dv^2 != 0");
      if (m + 1 <= M && k - 1 >= klo) {
        SpMat lhs = multiply(at(dv, m + 1, k), at(dh, m, k));
        SpMat rhs = multiply(at(dh, m, k - 1), at(dv, m, k));
        if (!add_scaled(lhs, 1, rhs, 1).is_zero())
          throw std::logic_error("bicomplex: dh dv + dv dh != 0");
      }
    }
}

Bicomplex nerve_bicomplex(const CosimplicialGroup& c, const ChainFactor& v) {
  if (c.augmented) throw std::invalid_argument("nerve_bicomplex: augmented input unsupported");
  Bicomplex e;
  e.M = c.N;
  e.klo = 0;
  e.khi = static_cast<int>(v.dims.size()) - 1;
  CochainComplex nv = nerve(c);
  e.dims.resize(static_cast<size_t>(e.M) + 1);
  e.dh.resize(static_cast<size_t>(e.M) + 1);
  e.dv.resize(static_cast<size_t>(e.M) + 1);
  for (int m = 0; m <= e.M; ++m) {
    const long cm = c.dims[static_cast<size_t>(m)];
    e.dims[static_cast<size_t>(m)].resize(static_cast<size_t>(e.khi) + 1);
    e.dh[static_cast<size_t>(m)].resize(static_cast<size_t>(e.khi) + 1);
    e.dv[static_cast<size_t>(m)].resize(static_cast<size_t>(e.khi) + 1);
    for (int k = 0; k <= e.khi; ++k) {
      const long vk = v.dims[static_cast<size_t>(k)];
      e.dims[static_cast<size_t>(m)][static_cast<size_t>(k)] = cm * vk;
      // horizontal: nerve differential (x) id
      SpMat h(m < e.M ? c.dims[static_cast<size_t>(m) + 1] * vk : 0, cm * vk);
      if (m < e.M) {
        const SpMat& dm = nv.d[static_cast<size_t>(m)];
        for (long col = 0; col < dm.cols; ++col)
          for (const auto& [row, val] : dm.cols_[static_cast<size_t>(col)])
            for (long j = 0; j < vk; ++j) h.add(row * vk + j, col * vk + j, val);
      }
      h.finalize();
      e.dh[static_cast<size_t>(m)][static_cast<size_t>(k)] = std::move(h);
      // vertical: (-1)^m id (x) d_V
      SpMat w(k - 1 >= 0 ? cm * v.dims[static_cast<size_t>(k) - 1] : 0, cm * vk);
      if (k - 1 >= 0) {
        const SpMat& dv = v.d[static_cast<size_t>(k) - 1];
        const long vk1 = v.dims[static_cast<size_t>(k) - 1];
        const long long sg = (m % 2 == 0) ? 1 : -1;
        for (long col = 0; col < dv.cols; ++col)
          for (const auto& [row, val] : dv.cols_[static_cast<size_t>(col)])
            for (long i = 0; i < cm; ++i) w.add(i * vk1 + row, i * vk + col, sg * val);
      }
      w.finalize();
      e.dv[static_cast<size_t>(m)][static_cast<size_t>(k)] = std::move(w);
    }
  }
  return e;
}

CochainComplex totalize(const Bicomplex& e) {
  CochainComplex out;
  out.lo = 0 - e.khi;
  const int thi = e.M - e.klo;
  out.dims.assign(static_cast<size_t>(thi - out.lo + 1), 0);
  auto blocks_of = [&](int t) {
    std::vector<std::pair<int, int>> bs;  // (m, k)
    for (int m = 0; m <= e.M; ++m) {
      const int k = m - t;
      if (k >= e.klo && k <= e.khi) bs.emplace_back(m, k);
    }
    return bs;
  };
  auto dims_at = [&](int m, int k) {
    return e.dims[static_cast<size_t>(m)][static_cast<size_t>(k - e.klo)];
  };
  auto offsets_of = [&](int t) {
    std::map<std::pair<int, int>, long> off;
    long total = 0;
    for (auto [m, k] : blocks_of(t)) {
      off[{m, k}] = total;
      total += dims_at(m, k);
    }
    return std::make_pair(off, total);
  };
  for (int t = out.lo; t <= thi; ++t) out.dims[static_cast<size_t>(t - out.lo)] = offsets_of(t).second;
  out.d.resize(out.dims.size() - 1);
  for (int t = out.lo; t < thi; ++t) {
    auto [off_src, n_src] = offsets_of(t);
    auto [off_dst, n_dst] = offsets_of(t + 1);
    SpMat m(n_dst, n_src);
    for (auto [mm, k] : blocks_of(t)) {
      const long src_off = off_src[{mm, k}];
      // dh : (mm, k) -> (mm + 1, k)
      if (mm + 1 <= e.M && off_dst.count({mm + 1, k})) {
        const SpMat& h = e.dh[static_cast<size_t>(mm)][static_cast<size_t>(k - e.klo)];
        const long dst_off = off_dst[{mm + 1, k}];
        for (long col = 0; col < h.cols; ++col)
          for (const auto& [row, v] : h.cols_[static_cast<size_t>(col)])
            m.add(dst_off + row, src_off + col, v);
      }
      // -dv : (mm, k) -> (mm, k-1)
      if (k - 1 >= e.klo && off_dst.count({mm, k - 1})) {
        const SpMat& w = e.dv[static_cast<size_t>(mm)][static_cast<size_t>(k - e.klo)];
        const long dst_off = off_dst[{mm, k - 1}];
        for (long col = 0; col < w.cols; ++col)
          for (const auto& [row, v] : w.cols_[static_cast<size_t>(col)])
            m.add(dst_off + row, src_off + col, -v);
      }
    }
    m.finalize();
    out.d[static_cast<size_t>(t - out.lo)] = std::move(m);
  }
  return out;
}

bool SummandKey::operator<(const SummandKey& o) const {
  if (unit != o.unit) return unit && !o.unit;
  if (!(chi == o.chi)) return chi < o.chi;
  return xs < o.xs;
}

bool SummandKey::operator==(const SummandKey& o) const {
  return unit == o.unit && chi == o.chi && xs == o.xs;
}

std::string SummandKey::str() const {
  if (unit) return "base";
  std::string s = chi.str() + "@<";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + ">";
}

SummandKey classify_summand(const std::vector<int>& tuple, const Perm& sigma) {
  SummandKey key;
  if (sigma.is_identity()) return key;
  const int n = sigma.arity();
  if (static_cast<int>(tuple.size()) != n + 1)
    throw std::invalid_argument("classify_summand: tuple length");
  key.unit = false;
  key.chi = contract(sigma);
  const Perm inv = inverse(sigma);
  for (int j = 0; j <= n; ++j) {
    bool deleted;
    if (j == 0)
      deleted = sigma(1) == 1;
    else if (j == n)
      deleted = sigma(n) == n;
    else
      deleted = inv(j + 1) == inv(j) + 1;
    if (!deleted) key.xs.push_back(tuple[static_cast<size_t>(j)]);
  }
  if (static_cast<int>(key.xs.size()) != key.chi.arity() + 1)
    throw std::logic_error("classify_summand: kept-entry count mismatch");
  return key;
}

std::vector<SummandInfo> decompose_ranks(int q, int N) {
  std::map<SummandKey, std::vector<long>> acc;
  for (int n = 0; n <= N; ++n) {
    for (const Perm& s : all_perms(n)) {
      for (const auto& t : d_tuples(q, n)) {
        SummandKey key = classify_summand(t, s);
        auto it = acc.find(key);
        if (it == acc.end())
          it = acc.emplace(key, std::vector<long>(static_cast<size_t>(N) + 1, 0)).first;
        it->second[static_cast<size_t>(n)] += 1;
      }
    }
  }
  std::vector<SummandInfo> out;
  for (auto& [key, ranks] : acc) out.push_back(SummandInfo{key, std::move(ranks)});
  return out;
}

namespace {

long sum_products(const std::vector<int>& widths, int total_degree) {
  // sum over d_j >= -1 with sum d_j = total_degree of prod dim_D(w_j, d_j)
  long acc = 0;
  std::function<void(size_t, int, long)> rec = [&](size_t idx, int rest, long prod) {
    if (idx + 1 == widths.size()) {
      if (rest >= -1) acc += prod * dim_D(widths[idx], rest);
      return;
    }
    for (int d = -1; d <= rest + static_cast<int>(widths.size() - idx - 1); ++d) {
      long f = dim_D(widths[idx], d);
      if (f == 0) continue;
      rec(idx + 1, rest - d, prod * f);
    }
  };
  if (widths.empty()) return total_degree == 0 ? 1 : 0;
  rec(0, total_degree, 1);
  return acc;
}

std::vector<int> summand_widths(int q, const SummandKey& key) {
  std::vector<int> w;
  int prev = 0;
  for (int x : key.xs) {
    w.push_back(x - prev);
    prev = x;
  }
  w.push_back(q - prev);
  return w;
}

}  // namespace

long summand_rank_formula(int q, const SummandKey& key, int n) {
  if (key.unit) return dim_D(q, n);
  const int m = key.chi.arity();
  return sum_products(summand_widths(q, key), n - (2 * m + 2));
}

CochainComplex summand_complex(int q, const SummandKey& key, int N) {
  if (key.unit) return nerve(build_D(q, N));
  const int m = key.chi.arity();
  const std::vector<int> widths = summand_widths(q, key);
  const int nf = std::max(0, N - m);
  CochainComplex acc;
  bool first = true;
  for (int w : widths) {
    CochainComplex f = nerve_Dhat(w, nf);
    acc = first ? f : tensor(acc, f);
    first = false;
  }
  return shift(std::move(acc), 2 * m + 2);
}

CochainComplex nerve_Dhat(int q, int N) { return nerve(build_Dhat(q, N)); }

}  // namespace natop
