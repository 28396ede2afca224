#include "natop/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace natop {

IntervalMorphism::IntervalMorphism(int src_n, int dst_n, std::vector<int> map,
                                   std::vector<std::vector<int>> fibers)
    : src_n_(src_n), dst_n_(dst_n), map_(std::move(map)), fibers_(std::move(fibers)) {
  if (src_n_ < -1 || dst_n_ < -1) throw std::invalid_argument("interval: bad object");
  const size_t dom = static_cast<size_t>(src_n_) + 3;
  const size_t cod = static_cast<size_t>(dst_n_) + 3;
  if (map_.size() != dom) throw std::invalid_argument("interval: map size");
  if (fibers_.size() != cod) throw std::invalid_argument("interval: fiber count");
  for (int x = -1; x <= src_n_ + 1; ++x) {
    int v = apply(x);
    if (v < -1 || v > dst_n_ + 1) throw std::invalid_argument("interval: value out of range");
  }
  if (apply(-1) != -1 || apply(src_n_ + 1) != dst_n_ + 1)
    throw std::invalid_argument("interval: endpoints not preserved");
  // Each fiber list must be exactly the fiber as a set.
  std::vector<char> seen(dom, 0);
  for (int i = -1; i <= dst_n_ + 1; ++i) {
    for (int x : fiber(i)) {
      if (x < -1 || x > src_n_ + 1 || apply(x) != i)
        throw std::invalid_argument("interval: fiber entry mismatch");
      if (seen[static_cast<size_t>(x) + 1])
        throw std::invalid_argument("interval: fiber entry repeated");
      seen[static_cast<size_t>(x) + 1] = 1;
    }
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("interval: fibers do not cover the domain");
  if (fiber(-1).front() != -1)
    throw std::invalid_argument("interval: -1 not minimal in its fiber");
  if (fiber(dst_n_ + 1).back() != src_n_ + 1)
    throw std::invalid_argument("interval: top not maximal in its fiber");
}

IntervalMorphism IntervalMorphism::monotone(int src_n, int dst_n, std::vector<int> map) {
  std::vector<std::vector<int>> fibers(static_cast<size_t>(dst_n) + 3);
  for (int x = -1; x <= src_n + 1; ++x)
    fibers[static_cast<size_t>(map[static_cast<size_t>(x) + 1]) + 1].push_back(x);
  return IntervalMorphism(src_n, dst_n, std::move(map), std::move(fibers));
}

IntervalMorphism IntervalMorphism::identity(int n) {
  std::vector<int> map(static_cast<size_t>(n) + 3);
  for (int x = -1; x <= n + 1; ++x) map[static_cast<size_t>(x) + 1] = x;
  return monotone(n, n, std::move(map));
}

bool IntervalMorphism::operator==(const IntervalMorphism& o) const {
  return src_n_ == o.src_n_ && dst_n_ == o.dst_n_ && map_ == o.map_ && fibers_ == o.fibers_;
}

bool IntervalMorphism::operator<(const IntervalMorphism& o) const {
  if (src_n_ != o.src_n_) return src_n_ < o.src_n_;
  if (dst_n_ != o.dst_n_) return dst_n_ < o.dst_n_;
  if (map_ != o.map_) return map_ < o.map_;
  return fibers_ < o.fibers_;
}

std::string IntervalMorphism::str() const {
  std::string s = "<" + std::to_string(src_n_) + ">-><" + std::to_string(dst_n_) + ">:";
  for (int x = -1; x <= src_n_ + 1; ++x) {
    if (x > -1) s += ",";
    s += std::to_string(apply(x));
  }
  s += ";";
  for (int i = -1; i <= dst_n_ + 1; ++i) {
    s += "(";
    const auto& f = fiber(i);
    for (size_t j = 0; j < f.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(f[j]);
    }
    s += ")";
  }
  return s;
}

bool is_order_preserving(const IntervalMorphism& f) {
  for (int x = -1; x < f.src() + 1; ++x)
    if (f.apply(x) > f.apply(x + 1)) return false;
  // Fiber orders of a morphism of I are forced to be the natural order.
  for (int i = -1; i <= f.dst() + 1; ++i)
    if (!std::is_sorted(f.fiber(i).begin(), f.fiber(i).end())) return false;
  return true;
}

IntervalMorphism compose(const IntervalMorphism& g, const IntervalMorphism& f) {
  if (f.dst() != g.src()) throw std::invalid_argument("compose: object mismatch");
  std::vector<int> map(static_cast<size_t>(f.src()) + 3);
  for (int x = -1; x <= f.src() + 1; ++x)
    map[static_cast<size_t>(x) + 1] = g.apply(f.apply(x));
  std::vector<std::vector<int>> fibers(static_cast<size_t>(g.dst()) + 3);
  for (int i = -1; i <= g.dst() + 1; ++i) {
    auto& out = fibers[static_cast<size_t>(i) + 1];
    for (int j : g.fiber(i))
      for (int x : f.fiber(j)) out.push_back(x);
  }
  return IntervalMorphism(f.src(), g.dst(), std::move(map), std::move(fibers));
}

IntervalMorphism aut(int n, const Perm& h) {
  if (h.arity() != n + 1) throw std::invalid_argument("aut: arity must be n+1");
  std::vector<int> map(static_cast<size_t>(n) + 3);
  map[0] = -1;
  map[static_cast<size_t>(n) + 2] = n + 1;
  for (int x = 0; x <= n; ++x) map[static_cast<size_t>(x) + 1] = h(x + 1) - 1;
  return IntervalMorphism::monotone(n, n, std::move(map));
}

std::pair<IntervalMorphism, Perm> factorize(const IntervalMorphism& f) {
  const int m = f.src();
  const int n = f.dst();
  // phi: the monotone rearrangement with the same interior fiber sizes.
  std::vector<int> phi_map(static_cast<size_t>(m) + 3);
  phi_map[0] = -1;
  phi_map[static_cast<size_t>(m) + 2] = n + 1;
  std::vector<int> h_im(static_cast<size_t>(m) + 1, 0);  // h(x+1), x interior
  int pos = 0;                                           // next interior position of <m>
  for (int i = -1; i <= n + 1; ++i) {
    for (int x : f.fiber(i)) {
      if (x == -1 || x == m + 1) continue;
      phi_map[static_cast<size_t>(pos) + 1] = i;
      h_im[static_cast<size_t>(x)] = pos + 1;
      ++pos;
    }
  }
  return {IntervalMorphism::monotone(m, n, std::move(phi_map)), Perm(std::move(h_im))};
}

std::pair<Perm, IntervalMorphism> crossed_action(const Perm& h, const IntervalMorphism& phi) {
  if (!is_order_preserving(phi)) throw std::invalid_argument("crossed_action: phi not in I");
  if (h.arity() != phi.dst() + 1) throw std::invalid_argument("crossed_action: arity mismatch");
  auto [hphi, ph] = factorize(compose(aut(phi.dst(), h), phi));
  return {ph, hphi};
}

IntervalMorphism interval_coface(int m, int i) {
  if (m < 0 || i < 0 || i > m + 1) throw std::out_of_range("interval_coface: bad index");
  std::vector<int> map(static_cast<size_t>(m) + 3);
  map[0] = -1;
  map[static_cast<size_t>(m) + 2] = m;
  for (int x = 0; x <= m; ++x) map[static_cast<size_t>(x) + 1] = (x <= i - 1) ? x : x - 1;
  return IntervalMorphism::monotone(m, m - 1, std::move(map));
}

IntervalMorphism interval_codegeneracy(int m, int i) {
  if (m < -1 || i < 0 || i > m + 1) throw std::out_of_range("interval_codegeneracy: bad index");
  std::vector<int> map(static_cast<size_t>(m) + 3);
  map[0] = -1;
  map[static_cast<size_t>(m) + 2] = m + 2;
  for (int x = 0; x <= m; ++x) map[static_cast<size_t>(x) + 1] = (x < i) ? x : x + 1;
  return IntervalMorphism::monotone(m, m + 1, std::move(map));
}

DeltaSMorphism embed_into_deltaS(const IntervalMorphism& f) {
  DeltaSMorphism g;
  g.src = f.src() + 2;
  g.dst = f.dst() + 2;
  g.map.resize(static_cast<size_t>(g.src) + 1);
  for (int i = 0; i <= g.src; ++i) g.map[static_cast<size_t>(i)] = f.apply(i - 1) + 1;
  g.fibers.resize(static_cast<size_t>(g.dst) + 1);
  for (int i = 0; i <= g.dst; ++i)
    for (int x : f.fiber(i - 1)) g.fibers[static_cast<size_t>(i)].push_back(x + 1);
  return g;
}

namespace {

void fiber_orders_rec(const std::vector<std::vector<int>>& raw, size_t idx, int m, int n,
                      std::vector<int>& map, std::vector<std::vector<int>>& acc,
                      std::vector<IntervalMorphism>& out) {
  const size_t cod = static_cast<size_t>(n) + 3;
  if (idx == cod) {
    out.emplace_back(m, n, map, acc);
    return;
  }
  std::vector<int> f = raw[idx];
  std::sort(f.begin(), f.end());
  do {
    // Endpoint constraints: -1 first in the fiber over -1, m+1 last over n+1.
    if (idx == 0 && !f.empty() && f.front() != -1) continue;
    if (idx == cod - 1 && !f.empty() && f.back() != m + 1) continue;
    acc[idx] = f;
    fiber_orders_rec(raw, idx + 1, m, n, map, acc, out);
  } while (std::next_permutation(f.begin(), f.end()));
}

void values_rec(int m, int n, int x, std::vector<int>& map,
                std::vector<IntervalMorphism>& out, bool monotone_only) {
  if (x == m + 1) {
    std::vector<std::vector<int>> raw(static_cast<size_t>(n) + 3);
    for (int y = -1; y <= m + 1; ++y)
      raw[static_cast<size_t>(map[static_cast<size_t>(y) + 1]) + 1].push_back(y);
    if (monotone_only) {
      out.emplace_back(IntervalMorphism::monotone(m, n, map));
    } else {
      std::vector<std::vector<int>> acc(static_cast<size_t>(n) + 3);
      fiber_orders_rec(raw, 0, m, n, map, acc, out);
    }
    return;
  }
  const int lo = monotone_only ? map[static_cast<size_t>(x) /* previous point */] : -1;
  for (int v = std::max(lo, -1); v <= n + 1; ++v) {
    map[static_cast<size_t>(x) + 1] = v;
    values_rec(m, n, x + 1, map, out, monotone_only);
  }
}

std::vector<IntervalMorphism> enumerate(int m, int n, bool monotone_only) {
  std::vector<int> map(static_cast<size_t>(m) + 3);
  map[0] = -1;
  map[static_cast<size_t>(m) + 2] = n + 1;
  std::vector<IntervalMorphism> out;
  values_rec(m, n, 0, map, out, monotone_only);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IntervalMorphism> all_interval_morphisms(int m, int n) {
  return enumerate(m, n, false);
}

std::vector<IntervalMorphism> all_monotone_morphisms(int m, int n) {
  return enumerate(m, n, true);
}

std::pair<int, Perm> free_coface_indices(const Perm& h, int i) {
  return {bar_index(h, i), coface(h, i)};
}

std::pair<int, Perm> free_codegeneracy_indices(const Perm& h, int i) {
  return {under_index(h, i), codegeneracy(h, i)};
}

}  // namespace natop
