#include "natop/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace natop {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = arity();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n) throw std::invalid_argument("Perm: image out of range");
    if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("Perm: repeated image");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int i = 1; i <= arity(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Perm::operator<(const Perm& o) const {
  if (arity() != o.arity()) return arity() < o.arity();
  return images_ < o.images_;
}

std::string Perm::str() const {
  std::string s = "[";
  for (int i = 0; i < arity(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[static_cast<size_t>(i)]);
  }
  return s + "]";
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.arity() != q.arity()) throw std::invalid_argument("compose: arity mismatch");
  std::vector<int> im(static_cast<size_t>(p.arity()));
  for (int i = 1; i <= p.arity(); ++i) im[static_cast<size_t>(i) - 1] = p(q(i));
  return Perm(std::move(im));
}

Perm inverse(const Perm& p) {
  std::vector<int> im(static_cast<size_t>(p.arity()));
  for (int i = 1; i <= p.arity(); ++i) im[static_cast<size_t>(p(i)) - 1] = i;
  return Perm(std::move(im));
}

int sign(const Perm& p) {
  int inv = 0;
  for (int i = 1; i <= p.arity(); ++i)
    for (int j = i + 1; j <= p.arity(); ++j)
      if (p(i) > p(j)) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

GradeDecomposition grade(const Perm& p) {
  const int n = p.arity();
  GradeDecomposition gd;
  if (p.is_identity()) {
    gd.a = n >= 1 ? n - 1 : 0;
    gd.b = 0;
    gd.c = 0;
    gd.g = n - 1;
    gd.omega = Perm::identity(1);
    gd.kappa = Perm::identity(1);
    return gd;
  }
  int a = 0;
  while (p(a + 1) == a + 1) ++a;
  int c = 0;
  while (p(n - c) == n - c) ++c;
  const int k = n - a - c;
  std::vector<int> om(static_cast<size_t>(k));
  for (int s = 1; s <= k; ++s) om[static_cast<size_t>(s) - 1] = p(a + s) - a;
  Perm omega(std::move(om));
  int b = 0;
  for (int s = 1; s < k; ++s)
    if (omega(s + 1) == omega(s) + 1) ++b;
  gd.a = a;
  gd.b = b;
  gd.c = c;
  gd.g = a + b + c;
  gd.omega = omega;
  gd.kappa = contract(p);
  return gd;
}

Perm contract(const Perm& p) {
  if (p.is_identity()) return Perm::identity(1);
  const int n = p.arity();
  int a = 0;
  while (p(a + 1) == a + 1) ++a;
  int c = 0;
  while (p(n - c) == n - c) ++c;
  const int k = n - a - c;
  std::vector<int> om(static_cast<size_t>(k));
  for (int s = 1; s <= k; ++s) om[static_cast<size_t>(s) - 1] = p(a + s) - a;
  // Group the strands of omega into maximal runs s, s+1 with
  // omega(s+1) = omega(s) + 1, then order the runs by their output values.
  std::vector<int> reps;  // omega at the first strand of each run
  for (int s = 1; s <= k; ++s) {
    if (s == 1 || om[static_cast<size_t>(s) - 1] != om[static_cast<size_t>(s) - 2] + 1)
      reps.push_back(om[static_cast<size_t>(s) - 1]);
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> im(static_cast<size_t>(m));
  for (int r = 0; r < m; ++r) {
    int rank = 1;
    for (int t = 0; t < m; ++t)
      if (reps[static_cast<size_t>(t)] < reps[static_cast<size_t>(r)]) ++rank;
    im[static_cast<size_t>(r)] = rank;
  }
  return Perm(std::move(im));
}

bool is_simple(const Perm& p) {
  if (p.arity() < 1) return false;
  return grade(p).g == 0;
}

Perm coface(const Perm& p, int i) {
  const int q = p.arity();
  if (i < 0 || i > q + 1) throw std::out_of_range("coface: index out of range");
  std::vector<int> im;
  im.reserve(static_cast<size_t>(q) + 1);
  if (i == 0) {
    im.push_back(1);
    for (int x = 1; x <= q; ++x) im.push_back(p(x) + 1);
  } else if (i == q + 1) {
    for (int x = 1; x <= q; ++x) im.push_back(p(x));
    im.push_back(q + 1);
  } else {
    const int v = p(i);
    for (int x = 1; x <= q + 1; ++x) {
      if (x < i) {
        int w = p(x);
        im.push_back(w > v ? w + 1 : w);
      } else if (x == i) {
        im.push_back(v);
      } else if (x == i + 1) {
        im.push_back(v + 1);
      } else {
        int w = p(x - 1);
        im.push_back(w > v ? w + 1 : w);
      }
    }
  }
  return Perm(std::move(im));
}

Perm codegeneracy(const Perm& p, int i) {
  const int q = p.arity();
  if (i < 0 || i > q - 1) throw std::out_of_range("codegeneracy: index out of range");
  const int v = p(i + 1);
  std::vector<int> im;
  im.reserve(static_cast<size_t>(q) - 1);
  for (int x = 1; x <= q - 1; ++x) {
    int w = (x <= i) ? p(x) : p(x + 1);
    im.push_back(w > v ? w - 1 : w);
  }
  return Perm(std::move(im));
}

int bar_index(const Perm& h, int i) {
  const int n = h.arity();
  if (i < 0 || i > n + 1) throw std::out_of_range("bar_index: index out of range");
  if (i == 0 || i == n + 1) return i;
  return h(i);
}

int under_index(const Perm& h, int i) {
  const int n = h.arity();
  if (i < 0 || i > n - 1) throw std::out_of_range("under_index: index out of range");
  return h(i + 1) - 1;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Perm> simple_perms(int n) {
  std::vector<Perm> out;
  for (const Perm& p : all_perms(n))
    if (is_simple(p)) out.push_back(p);
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long perm_rank(const Perm& p) {
  const int n = p.arity();
  long rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller;
    rank += smaller * factorial(n - i);
  }
  return rank;
}

}  // namespace natop
