#include "natop/intmat.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace natop {

void SpMat::add(long r, long c, long long v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SpMat::add");
  if (v != 0) cols_[static_cast<size_t>(c)].emplace_back(r, v);
}

void SpMat::finalize() {
  for (auto& col : cols_) {
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long, long long>> out;
    for (const auto& [r, v] : col) {
      if (!out.empty() && out.back().first == r)
        out.back().second += v;
      else
        out.emplace_back(r, v);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& e) { return e.second == 0; }),
              out.end());
    col = std::move(out);
  }
}

long long SpMat::nnz() const {
  long long n = 0;
  for (const auto& col : cols_) n += static_cast<long long>(col.size());
  return n;
}

bool SpMat::is_zero() const { return nnz() == 0; }

SpMat SpMat::identity(long n) {
  SpMat m(n, n);
  for (long i = 0; i < n; ++i) m.add(i, i, 1);
  m.finalize();
  return m;
}

SpMat multiply(const SpMat& a, const SpMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  SpMat c(a.rows, b.cols);
  std::map<long, long long> acc;
  for (long j = 0; j < b.cols; ++j) {
    acc.clear();
    for (const auto& [k, v] : b.cols_[static_cast<size_t>(j)])
      for (const auto& [i, w] : a.cols_[static_cast<size_t>(k)]) acc[i] += v * w;
    for (const auto& [i, v] : acc)
      if (v != 0) c.cols_[static_cast<size_t>(j)].emplace_back(i, v);
  }
  return c;
}

SpMat add_scaled(const SpMat& a, long long alpha, const SpMat& b, long long beta) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("add_scaled: shape");
  SpMat c(a.rows, a.cols);
  for (long j = 0; j < a.cols; ++j) {
    for (const auto& [r, v] : a.cols_[static_cast<size_t>(j)]) c.add(r, j, alpha * v);
    for (const auto& [r, v] : b.cols_[static_cast<size_t>(j)]) c.add(r, j, beta * v);
  }
  c.finalize();
  return c;
}

bool equal(const SpMat& a, const SpMat& b) {
  return add_scaled(a, 1, b, -1).is_zero();
}

namespace {

// Working state for the sparse unit-pivot phase.
struct Elim {
  std::vector<std::map<long, Int>> row;  // row -> (col -> value)
  std::vector<std::set<long>> colrows;   // col -> rows with a nonzero entry

  void set(long r, long c, Int v) {
    auto& m = row[static_cast<size_t>(r)];
    if (v == 0) {
      m.erase(c);
      colrows[static_cast<size_t>(c)].erase(r);
    } else {
      m[c] = std::move(v);
      colrows[static_cast<size_t>(c)].insert(r);
    }
  }
};

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Classical SNF on a small dense remainder; returns invariant factors (> 0).
std::vector<Int> dense_snf(std::vector<std::vector<Int>> a) {
  std::vector<Int> factors;
  size_t top = 0;
  const size_t R = a.size();
  const size_t C = R ? a[0].size() : 0;
  while (true) {
    // Find the entry of minimal nonzero magnitude in the active block.
    long pr = -1, pc = -1;
    Int best = 0;
    for (size_t i = top; i < R; ++i)
      for (size_t j = top; j < C; ++j)
        if (a[i][j] != 0 && (pr < 0 || abs_int(a[i][j]) < best)) {
          pr = static_cast<long>(i);
          pc = static_cast<long>(j);
          best = abs_int(a[i][j]);
        }
    if (pr < 0) break;
    std::swap(a[static_cast<size_t>(pr)], a[top]);
    for (size_t i = top; i < R; ++i) std::swap(a[i][static_cast<size_t>(pc)], a[i][top]);

    bool clean = true;
    Int p = a[top][top];
    // Reduce the pivot column.
    for (size_t i = top + 1; i < R; ++i) {
      if (a[i][top] == 0) continue;
      Int q = a[i][top] / p;
      if (q != 0)
        for (size_t j = top; j < C; ++j) a[i][j] -= q * a[top][j];
      if (a[i][top] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; re-select pivot
    // Reduce the pivot row.
    for (size_t j = top + 1; j < C; ++j) {
      if (a[top][j] == 0) continue;
      Int q = a[top][j] / p;
      if (q != 0)
        for (size_t i = top; i < R; ++i) a[i][j] -= q * a[i][top];
      if (a[top][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce divisibility of the rest of the block by the pivot.
    bool divides_all = true;
    for (size_t i = top + 1; i < R && divides_all; ++i)
      for (size_t j = top + 1; j < C; ++j)
        if (a[i][j] % p != 0) {
          for (size_t jj = top; jj < C; ++jj) a[top][jj] += a[i][jj];
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    factors.push_back(abs_int(p));
    ++top;
  }
  return factors;
}

}  // namespace

SnfResult smith_normal_form(const SpMat& m) {
  Elim e;
  e.row.resize(static_cast<size_t>(m.rows));
  e.colrows.resize(static_cast<size_t>(m.cols));
  for (long c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.cols_[static_cast<size_t>(c)]) {
      if (v == 0) continue;
      e.row[static_cast<size_t>(r)][c] = Int(v);
      e.colrows[static_cast<size_t>(c)].insert(r);
    }

  SnfResult res;
  std::vector<char> row_dead(static_cast<size_t>(m.rows), 0);
  std::vector<char> col_dead(static_cast<size_t>(m.cols), 0);

  // Lazy Markowitz heap over unit entries: (cost, row, col).
  using Cand = std::tuple<long long, long, long>;
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  auto cost_of = [&](long r, long c) -> long long {
    return static_cast<long long>(e.row[static_cast<size_t>(r)].size() - 1) *
           static_cast<long long>(e.colrows[static_cast<size_t>(c)].size() - 1);
  };
  auto push_units_of_row = [&](long r) {
    for (const auto& [c, v] : e.row[static_cast<size_t>(r)])
      if (v == 1 || v == -1) heap.emplace(cost_of(r, c), r, c);
  };
  for (long r = 0; r < m.rows; ++r) push_units_of_row(r);

  while (!heap.empty()) {
    auto [cost, r, c] = heap.top();
    heap.pop();
    if (row_dead[static_cast<size_t>(r)] || col_dead[static_cast<size_t>(c)]) continue;
    auto it = e.row[static_cast<size_t>(r)].find(c);
    if (it == e.row[static_cast<size_t>(r)].end()) continue;
    const Int& v = it->second;
    if (v != 1 && v != -1) continue;
    long long now = cost_of(r, c);
    if (now > cost) {
      heap.emplace(now, r, c);
      continue;
    }
    // Eliminate every other entry of column c with row operations.
    const long long pv = (v == 1) ? 1 : -1;
    std::vector<long> targets(e.colrows[static_cast<size_t>(c)].begin(),
                              e.colrows[static_cast<size_t>(c)].end());
    std::vector<std::pair<long, Int>> pivot_row(e.row[static_cast<size_t>(r)].begin(),
                                                e.row[static_cast<size_t>(r)].end());
    for (long r2 : targets) {
      if (r2 == r) continue;
      Int q = e.row[static_cast<size_t>(r2)][c] * pv;
      for (const auto& [c2, w] : pivot_row) {
        auto& row2 = e.row[static_cast<size_t>(r2)];
        auto jt = row2.find(c2);
        Int nv = (jt == row2.end() ? Int(0) : jt->second) - q * w;
        e.set(r2, c2, std::move(nv));
      }
      push_units_of_row(r2);
    }
    // Drop the pivot row and column; clearing the pivot row only touches
    // row r because column c is now a singleton.
    for (const auto& [c2, w] : pivot_row) {
      (void)w;
      e.colrows[static_cast<size_t>(c2)].erase(r);
    }
    e.row[static_cast<size_t>(r)].clear();
    row_dead[static_cast<size_t>(r)] = 1;
    col_dead[static_cast<size_t>(c)] = 1;
    res.rank += 1;
  }

  // Collect the (small) remainder and finish densely.
  std::vector<long> live_rows, live_cols;
  std::map<long, long> colmap;
  for (long r = 0; r < m.rows; ++r)
    if (!row_dead[static_cast<size_t>(r)] && !e.row[static_cast<size_t>(r)].empty())
      live_rows.push_back(r);
  for (long r : live_rows)
    for (const auto& [c, v] : e.row[static_cast<size_t>(r)])
      if (!colmap.count(c)) {
        colmap[c] = static_cast<long>(live_cols.size());
        live_cols.push_back(c);
      }
  if (!live_rows.empty()) {
    std::vector<std::vector<Int>> dense(live_rows.size(),
                                        std::vector<Int>(live_cols.size(), Int(0)));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : e.row[static_cast<size_t>(live_rows[i])])
        dense[i][static_cast<size_t>(colmap[c])] = v;
    std::vector<Int> factors = dense_snf(std::move(dense));
    for (Int& f : factors) {
      res.rank += 1;
      if (f > 1) res.torsion.push_back(std::move(f));
    }
  }
  std::sort(res.torsion.begin(), res.torsion.end());
  return res;
}

}  // namespace natop
