#include "natop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "natop/brace_span.hpp"
#include "natop/complexes.hpp"
#include "natop/hochschild.hpp"
#include "natop/interval.hpp"
#include "natop/operad.hpp"
#include "natop/tree.hpp"

namespace natop {

bool SuiteResult::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Suite {
  SuiteResult result;
  std::mt19937_64 rng;

  explicit Suite(std::string name, uint64_t seed) : rng(seed) { result.suite = std::move(name); }

  void check(const std::string& name, bool ok, const std::string& details = "") {
    result.checks.push_back({name, ok, details});
  }

  // Run a detailed predicate that fills in a failure description.
  void run(const std::string& name, const std::function<bool(std::string&)>& fn) {
    std::string details;
    bool ok = false;
    try {
      ok = fn(details);
    } catch (const std::exception& e) {
      ok = false;
      details = std::string("exception: ") + e.what();
    }
    check(name, ok, details);
  }
};

long long sgn_pow(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------------------
// Suite: sign-identity (permutation calculus)
// ---------------------------------------------------------------------------

void suite_sign_identity(Suite& s) {
  s.run("coface sign identity, q <= 6", [](std::string& details) {
    for (int q = 0; q <= 6; ++q)
      for (const Perm& p : all_perms(q))
        for (int i = 0; i <= q + 1; ++i) {
          long long lhs = sgn_pow(bar_index(p, i)) * sign(p);
          long long rhs = sgn_pow(i) * sign(coface(p, i));
          if (lhs != rhs) {
            details = "sigma=" + p.str() + " i=" + std::to_string(i);
            return false;
          }
        }
    return true;
  });
  s.run("contraction stable under cofaces, q <= 6", [](std::string& details) {
    for (int q = 1; q <= 6; ++q)
      for (const Perm& p : all_perms(q))
        for (int i = 1; i <= q + 1; ++i)
          if (!(contract(coface(p, i)) == contract(p))) {
            details = "sigma=" + p.str() + " i=" + std::to_string(i);
            return false;
          }
    return true;
  });
  s.run("grade bookkeeping, q <= 6", [](std::string& details) {
    for (int q = 1; q <= 6; ++q)
      for (const Perm& p : all_perms(q)) {
        GradeDecomposition g = grade(p);
        if (g.g != g.a + g.b + g.c || (!p.is_identity() && g.g != q - contract(p).arity())) {
          details = "sigma=" + p.str();
          return false;
        }
        if (!p.is_identity()) {
          // reconstitution 1_a x omega x 1_c
          for (int i = 1; i <= q; ++i) {
            int expect = i <= g.a                ? i
                         : i > q - g.c           ? i
                                                 : g.omega(i - g.a) + g.a;
            if (p(i) != expect) {
              details = "sigma=" + p.str() + " reconstitution";
              return false;
            }
          }
        }
        if (!(is_simple(g.kappa) || g.kappa == Perm::identity(1))) {
          details = "sigma=" + p.str() + " kappa not simple";
          return false;
        }
      }
    return true;
  });
}

// Random-order contraction: repeatedly apply one admissible reduction.
Perm contract_random_order(Perm p, std::mt19937_64& rng) {
  while (true) {
    const int n = p.arity();
    if (p.is_identity()) {
      if (n <= 1) return n == 1 ? p : Perm::identity(1);
      // shrink the identity one strand at a time
      p = codegeneracy(p, 0);
      continue;
    }
    std::vector<int> moves;  // strand s to merge with s+1 (0 = leading, n = trailing)
    if (p(1) == 1) moves.push_back(0);
    if (p(n) == n) moves.push_back(n);
    for (int t = 1; t < n; ++t)
      if (p(t + 1) == p(t) + 1) moves.push_back(t);
    if (moves.empty()) return p;
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    int mv = moves[pick(rng)];
    if (mv == 0)
      p = codegeneracy(p, 0);
    else if (mv == n)
      p = codegeneracy(p, n - 1);
    else
      p = codegeneracy(p, mv - 1);
  }
}

void suite_confluence(Suite& s) {
  s.run("contraction independent of merge order, q <= 7", [&s](std::string& details) {
    for (int q = 1; q <= 7; ++q)
      for (const Perm& p : all_perms(q)) {
        Perm expect = contract(p);
        for (int rep = 0; rep < 3; ++rep) {
          Perm got = contract_random_order(p, s.rng);
          if (!(got == expect)) {
            details = "sigma=" + p.str() + " got " + got.str() + " want " + expect.str();
            return false;
          }
        }
      }
    return true;
  });
  s.run("simple permutation counts", [](std::string& details) {
    if (simple_perms(2).size() != 1 || simple_perms(3).size() != 1) {
      details = "S2/S3 counts";
      return false;
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Suite: crossed-relations (the crossed interval group structure)
// ---------------------------------------------------------------------------

void suite_crossed_relations(Suite& s) {
  // Geometric commuting squares.  The automorphism realization carried by a
  // group element h acts as the interior permutation of the *inverse*
  // (morphism composition in the associated category is opposite to the
  // group law); the index twists stay with h itself.
  s.run("coface square rho(h) d_{hbar(i)} = d_i rho(d_i h), n <= 5", [](std::string& details) {
    for (int n = 1; n <= 5; ++n)
      for (const Perm& h : all_perms(n))
        for (int i = 0; i <= n + 1; ++i) {
          IntervalMorphism lhs =
              compose(aut(n - 1, inverse(h)), interval_coface(n, bar_index(h, i)));
          IntervalMorphism rhs =
              compose(interval_coface(n, i), aut(n, inverse(coface(h, i))));
          if (!(lhs == rhs)) {
            details = "h=" + h.str() + " i=" + std::to_string(i);
            return false;
          }
        }
    return true;
  });
  s.run("codegeneracy square rho(h) s_{hunder(i)} = s_i rho(s_i h), n <= 5",
        [](std::string& details) {
          for (int n = 2; n <= 5; ++n)
            for (const Perm& h : all_perms(n))
              for (int i = 0; i <= n - 1; ++i) {
                IntervalMorphism lhs = compose(aut(n - 1, inverse(h)),
                                               interval_codegeneracy(n - 2, under_index(h, i)));
                IntervalMorphism rhs = compose(interval_codegeneracy(n - 2, i),
                                               aut(n - 2, inverse(codegeneracy(h, i))));
                if (!(lhs == rhs)) {
                  details = "h=" + h.str() + " i=" + std::to_string(i);
                  return false;
                }
              }
          return true;
        });
  s.run("coface relation d_i(hh') = d_{hbar(i)}(h') d_i(h), n <= 4", [](std::string& details) {
    for (int n = 1; n <= 4; ++n)
      for (const Perm& h : all_perms(n))
        for (const Perm& hp : all_perms(n))
          for (int i = 0; i <= n + 1; ++i) {
            Perm lhs = coface(compose(h, hp), i);
            Perm rhs = compose(coface(h, bar_index(hp, i)), coface(hp, i));
            if (!(lhs == rhs)) {
              details = "h=" + h.str() + " h'=" + hp.str() + " i=" + std::to_string(i);
              return false;
            }
          }
    return true;
  });
  s.run("codegeneracy relation s_i(hh') = s_{hunder(i)}(h') s_i(h), n <= 4",
        [](std::string& details) {
          for (int n = 1; n <= 4; ++n)
            for (const Perm& h : all_perms(n))
              for (const Perm& hp : all_perms(n))
                for (int i = 0; i <= n - 1; ++i) {
                  Perm lhs = codegeneracy(compose(h, hp), i);
                  Perm rhs = compose(codegeneracy(h, under_index(hp, i)), codegeneracy(hp, i));
                  if (!(lhs == rhs)) {
                    details = "h=" + h.str() + " h'=" + hp.str() + " i=" + std::to_string(i);
                    return false;
                  }
                }
          return true;
        });
  s.run("unique factorization on hom-sets up to <2>", [](std::string& details) {
    for (int m = -1; m <= 2; ++m)
      for (int n = -1; n <= 2; ++n)
        for (const IntervalMorphism& f : all_interval_morphisms(m, n)) {
          auto [phi, h] = factorize(f);
          if (!is_order_preserving(phi) || !(compose(phi, aut(m, h)) == f)) {
            details = f.str();
            return false;
          }
          // uniqueness: no other interior permutation works
          for (const Perm& g : all_perms(m + 1)) {
            if (g == h) continue;
            bool match = false;
            for (const IntervalMorphism& psi : all_monotone_morphisms(m, n))
              if (compose(psi, aut(m, g)) == f) match = true;
            if (match) {
              details = f.str() + " second factorization";
              return false;
            }
          }
        }
    return true;
  });
  s.run("category laws on objects <-1>..<2>", [](std::string& details) {
    for (int a = -1; a <= 2; ++a) {
      for (int b = -1; b <= 2; ++b) {
        for (const IntervalMorphism& f : all_interval_morphisms(a, b)) {
          if (!(compose(IntervalMorphism::identity(b), f) == f) ||
              !(compose(f, IntervalMorphism::identity(a)) == f)) {
            details = "identity law " + f.str();
            return false;
          }
        }
      }
    }
    // associativity on a smaller range (hom-sets grow quickly)
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (int d = -1; d <= 1; ++d)
            for (const IntervalMorphism& f : all_interval_morphisms(a, b))
              for (const IntervalMorphism& g : all_interval_morphisms(b, c))
                for (const IntervalMorphism& h : all_interval_morphisms(c, d))
                  if (!(compose(h, compose(g, f)) == compose(compose(h, g), f))) {
                    details = "associativity";
                    return false;
                  }
    return true;
  });
  s.run("crossed action h phi = h*(phi) phi*(h), exhaustive S3 on <1> -> <2>",
        [](std::string& details) {
          for (const Perm& h : all_perms(3))
            for (const IntervalMorphism& phi : all_monotone_morphisms(1, 2)) {
              auto [ph, hphi] = crossed_action(h, phi);
              if (!(compose(aut(2, h), phi) == compose(hphi, aut(1, ph)))) {
                details = "h=" + h.str() + " phi=" + phi.str();
                return false;
              }
              if (h.is_identity() && (!(hphi == phi) || !ph.is_identity())) {
                details = "identity case";
                return false;
              }
            }
          return true;
        });
  s.run("hom-set cardinalities", [](std::string& details) {
    for (int k = 0; k <= 5; ++k)
      if (all_interval_morphisms(-1, k - 1).size() != 1) {
        details = "|IS(<-1>,<k-1>)| k=" + std::to_string(k);
        return false;
      }
    if (all_interval_morphisms(0, 0).size() != 3) {
      details = "|IS(<0>,<0>)| != 3";
      return false;
    }
    return true;
  });
  s.run("bar-action functoriality pins fiber-order composition", [](std::string& details) {
    // generator tensors: distinct generators everywhere make products faithful
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (const IntervalMorphism& f : all_interval_morphisms(a, b))
            for (const IntervalMorphism& g : all_interval_morphisms(b, c)) {
              std::vector<AlgebraElement> tensor;
              for (int i = 0; i < a + 3; ++i)
                tensor.push_back(AlgebraElement::generator(i + 1));
              auto lhs = bar_action(compose(g, f), tensor);
              auto rhs = bar_action(g, bar_action(f, tensor));
              if (!(lhs == rhs)) {
                details = "f=" + f.str() + " g=" + g.str();
                return false;
              }
            }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Suite: differential (d^2 = 0, Leibniz, convention uniqueness, oracle)
// ---------------------------------------------------------------------------

std::vector<TreeType> small_types(int max_l, int max_K, int max_n) {
  std::vector<TreeType> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& ks, int n,
                                                             int rest) {
    if (n == 0) {
      for (int l = 0; l <= max_l; ++l) out.push_back(TreeType{l, ks});
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      ks.push_back(v);
      rec(ks, n - 1, rest - v);
      ks.pop_back();
    }
  };
  for (int n = 0; n <= max_n; ++n) {
    std::vector<int> ks;
    rec(ks, n, max_K);
  }
  return out;
}

bool d_squared_zero(const TreeType& ty, const Tree& t, const SignConvention& conv,
                    std::string& details) {
  std::map<TreeType, TreeSum> acc;
  for (const auto& [ty1, sum1] : differential(t, ty, conv))
    for (const auto& [key1, term1] : sum1.terms())
      for (const auto& [ty2, sum2] : differential(term1.first, ty1, conv)) {
        auto it = acc.find(ty2);
        if (it == acc.end()) it = acc.emplace(ty2, TreeSum(ty2)).first;
        it->second.add_scaled(sum2, term1.second);
      }
  for (const auto& [ty2, sum] : acc)
    if (!sum.is_zero()) {
      details = "d^2 != 0 at " + ty.str() + " tree " + tree_key(t);
      return false;
    }
  return true;
}

bool leibniz_holds(const TreeType& ty1, const Tree& t1, int slot, const TreeType& ty2,
                   const Tree& t2, const SignConvention& conv, std::string& details) {
  // lhs = d(t1 o_slot t2)
  auto [comp, csign] = compose_graded(t1, ty1, slot, t2, ty2, conv);
  const TreeType cty = insert_type(ty1, slot, ty2);
  std::map<TreeType, TreeSum> lhs;
  for (auto& [oty, sum] : differential(comp, cty, conv)) {
    auto it = lhs.emplace(oty, TreeSum(oty)).first;
    it->second.add_scaled(sum, csign);
  }
  // rhs = d(t1) o t2  +  (-1)^{deg t1} t1 o d(t2), colour-mismatched terms drop
  std::map<TreeType, TreeSum> rhs;
  auto add_rhs = [&](const TreeSum& sum, long long coeff) {
    auto it = rhs.find(sum.type());
    if (it == rhs.end()) it = rhs.emplace(sum.type(), TreeSum(sum.type())).first;
    it->second.add_scaled(sum, coeff);
  };
  for (auto& [oty, sum] : differential(t1, ty1, conv)) {
    if (oty.ks[static_cast<size_t>(slot) - 1] != ty2.l) continue;  // colour mismatch
    add_rhs(compose_graded(sum, slot, [&] {
              TreeSum b(ty2);
              b.add(t2, 1);
              return b;
            }(), conv),
            1);
  }
  const long long sg = sgn_pow(ty1.degree());
  for (auto& [oty, sum] : differential(t2, ty2, conv)) {
    if (oty.l != ty1.ks[static_cast<size_t>(slot) - 1]) continue;  // colour mismatch
    TreeSum a(ty1);
    a.add(t1, 1);
    add_rhs(compose_graded(a, slot, sum, conv), sg);
  }
  // compare
  for (auto& [oty, sum] : lhs) {
    TreeSum diff = sum;
    auto it = rhs.find(oty);
    if (it != rhs.end()) diff.add_scaled(it->second, -1);
    if (!diff.is_zero()) {
      details = "Leibniz fails: " + ty1.str() + " o_" + std::to_string(slot) + " " +
                ty2.str() + " trees " + tree_key(t1) + ", " + tree_key(t2);
      return false;
    }
  }
  for (auto& [oty, sum] : rhs)
    if (!lhs.count(oty) && !sum.is_zero()) {
      details = "Leibniz fails (rhs extra): " + ty1.str() + " / " + ty2.str();
      return false;
    }
  return true;
}

void suite_differential(Suite& s) {
  const SignConvention conv = chosen_convention();
  s.run("d^2 = 0 on all basis trees, n <= 2, sum k <= 3, l <= 4", [&](std::string& details) {
    for (const TreeType& ty : small_types(4, 3, 2))
      for (const Tree& t : enumerate_basis(ty))
        if (!d_squared_zero(ty, t, conv, details)) return false;
    return true;
  });
  s.run("Leibniz rule, exhaustive small + seeded random", [&](std::string& details) {
    // exhaustive over small composable pairs
    for (const TreeType& ty1 : small_types(2, 2, 2)) {
      for (int slot = 1; slot <= ty1.n(); ++slot) {
        for (const TreeType& ty2 : small_types(2, 2, 1)) {
          if (ty2.l != ty1.ks[static_cast<size_t>(slot) - 1]) continue;
          for (const Tree& t1 : enumerate_basis(ty1))
            for (const Tree& t2 : enumerate_basis(ty2))
              if (!leibniz_holds(ty1, t1, slot, ty2, t2, conv, details)) return false;
        }
      }
    }
    // seeded random larger pairs
    std::vector<TreeType> pool1 = small_types(4, 3, 2);
    std::vector<TreeType> pool2 = small_types(3, 2, 2);
    std::uniform_int_distribution<size_t> p1(0, pool1.size() - 1);
    std::uniform_int_distribution<size_t> p2(0, pool2.size() - 1);
    int done = 0;
    while (done < 500) {
      TreeType ty1 = pool1[p1(s.rng)];
      if (ty1.n() == 0) continue;
      std::uniform_int_distribution<int> ps(1, ty1.n());
      int slot = ps(s.rng);
      TreeType ty2 = pool2[p2(s.rng)];
      if (ty2.l != ty1.ks[static_cast<size_t>(slot) - 1]) continue;
      auto b1 = enumerate_basis(ty1);
      auto b2 = enumerate_basis(ty2);
      if (b1.empty() || b2.empty()) continue;
      std::uniform_int_distribution<size_t> i1(0, b1.size() - 1), i2(0, b2.size() - 1);
      if (!leibniz_holds(ty1, b1[i1(s.rng)], slot, ty2, b2[i2(s.rng)], conv, details))
        return false;
      ++done;
    }
    return true;
  });
  // Discriminating spot checks against the Hochschild coboundary: the
  // raising part on two corollas of different output parity (pins e0, e1)
  // and the lowering part on the arity-1 corolla (pins c0).
  auto oracle_spot = [](const SignConvention& c) {
    {
      // delta on the (1;1) and (2;2) corollas vs the coboundary formula
      for (int k : {1, 2}) {
        std::vector<Tree> ch;
        for (int p = 1; p <= k; ++p) ch.push_back(leg(p));
        Tree t = white(1, ch);
        TreeType ty{k, {k}};
        SeparatingWitness w = build_separating_witness(t, ty);
        std::vector<Monomial> u;
        for (int p = 1; p <= k + 1; ++p) u.push_back(Monomial{p});
        MultilinearFn op = [&](const std::vector<Monomial>& v) {
          std::vector<AlgebraElement> args;
          for (const Monomial& m : v) args.push_back(AlgebraElement::monomial(m));
          return evaluate(t, ty, w.fs, args);
        };
        AlgebraElement expect = hochschild_coboundary(op, k, u);
        std::vector<AlgebraElement> args;
        for (const Monomial& m : u) args.push_back(AlgebraElement::monomial(m));
        AlgebraElement got = evaluate(delta_part(t, ty, c), w.fs, args);
        if (!(got == expect)) return false;
      }
    }
    {
      // lowering part on the (1;1) corolla vs precomposition with the
      // coboundary of an arity-0 cochain
      Tree t = white(1, {leg(1)});
      TreeType ty{1, {1}};
      SymbolicCochain f0;
      f0.arity = 0;
      f0.table[{}] = AlgebraElement::generator(9);
      MultilinearFn df0 = [&](const std::vector<Monomial>& v) {
        return hochschild_coboundary([&](const std::vector<Monomial>& w2) { return f0(w2); },
                                     0, v);
      };
      AlgebraElement expect =
          evaluate_override(t, ty, {SymbolicCochain{}}, generator_args(1), 1, df0);
      AlgebraElement expect_signed;
      expect_signed.add_scaled(expect, -1);  // -(-1)^{l+K+0} with l = K = 1
      TreeSum del = del_part(t, ty, 1, c);
      AlgebraElement got = evaluate(del, {f0}, generator_args(1));
      AlgebraElement got_signed;
      got_signed.add_scaled(got, -1);  // the differential subtracts del parts
      if (!(got_signed == expect_signed)) return false;
    }
    return true;
  };
  s.run("sign convention unique among candidates given the coboundary oracle",
        [&](std::string& details) {
          std::vector<SignConvention> survivors;
          for (int mask = 0; mask < 128; ++mask) {
            SignConvention c;
            c.e0 = (mask >> 0) & 1;
            c.e1 = (mask >> 1) & 1;
            c.e2 = (mask >> 2) & 1;
            c.c0 = (mask >> 3) & 1;
            c.c1 = (mask >> 4) & 1;
            c.c2 = (mask >> 5) & 1;
            c.c3 = (mask >> 6) & 1;
            c.comp_koszul = true;
            bool ok = true;
            std::string dummy;
            for (const TreeType& ty : small_types(2, 2, 2)) {
              for (const Tree& t : enumerate_basis(ty))
                if (!d_squared_zero(ty, t, c, dummy)) {
                  ok = false;
                  break;
                }
              if (!ok) break;
            }
            if (ok) {
              for (const TreeType& ty1 : small_types(2, 2, 2)) {
                for (int slot = 1; slot <= ty1.n() && ok; ++slot)
                  for (const TreeType& ty2 : small_types(1, 1, 1)) {
                    if (ty2.l != ty1.ks[static_cast<size_t>(slot) - 1]) continue;
                    for (const Tree& t1 : enumerate_basis(ty1)) {
                      for (const Tree& t2 : enumerate_basis(ty2))
                        if (!leibniz_holds(ty1, t1, slot, ty2, t2, c, dummy)) {
                          ok = false;
                          break;
                        }
                      if (!ok) break;
                    }
                    if (!ok) break;
                  }
                if (!ok) break;
              }
            }
            if (ok) survivors.push_back(c);
          }
          // d^2 = 0 and Leibniz pin the structural offsets; what remains is
          // the inert family of diagonal sign changes (e0, e1, c0), and the
          // coboundary oracle selects the chosen representative uniquely.
          bool found_chosen = false;
          int oracle_pass = 0;
          for (const auto& c : survivors) {
            if (c == chosen_convention()) found_chosen = true;
            if (c.e2 != 0 || c.c1 != 1 || c.c2 != 1 || c.c3 != 1) {
              details = "structural offsets not pinned: " + c.str();
              return false;
            }
            if (oracle_spot(c)) {
              ++oracle_pass;
              if (!(c == chosen_convention())) {
                details = "oracle accepts a different convention: " + c.str();
                return false;
              }
            }
          }
          std::ostringstream os;
          os << survivors.size() << " d^2/Leibniz survivors, " << oracle_pass
             << " oracle survivor(s)";
          details = os.str();
          return survivors.size() == 8 && found_chosen && oracle_pass == 1;
        });
  s.run("differential matches the Hochschild coboundary on the generic algebra",
        [&](std::string& details) {
          std::vector<std::pair<TreeType, Tree>> samples;
          samples.emplace_back(TreeType{1, {1}}, white(1, {leg(1)}));
          samples.emplace_back(TreeType{0, {1}}, white(1, {special()}));
          samples.emplace_back(TreeType{2, {1, 1}}, cup_generator(1, 1));
          samples.emplace_back(TreeType{2, {2}}, white(1, {leg(2), leg(1)}));
          samples.emplace_back(TreeType{1, {}}, leg(1));
          samples.emplace_back(
              TreeType{2, {1}},
              canonicalize(black({leg(2), white(1, {leg(1)})})));
          for (const auto& [ty, t] : samples) {
            SeparatingWitness w = build_separating_witness(t, ty);
            auto dt = differential(t, ty, conv);
            // delta-part against the coboundary of the evaluated operation
            {
              std::vector<Monomial> u;
              for (int p = 1; p <= ty.l + 1; ++p) u.push_back(Monomial{p});
              MultilinearFn op = [&](const std::vector<Monomial>& v) {
                std::vector<AlgebraElement> args;
                for (const Monomial& m : v) args.push_back(AlgebraElement::monomial(m));
                return evaluate(t, ty, w.fs, args);
              };
              AlgebraElement expect = hochschild_coboundary(op, ty.l, u);
              TreeType dty{ty.l + 1, ty.ks};
              AlgebraElement got;
              auto it = dt.find(dty);
              if (it != dt.end()) {
                std::vector<AlgebraElement> args;
                for (const Monomial& m : u) args.push_back(AlgebraElement::monomial(m));
                got = evaluate(it->second, w.fs, args);
              }
              if (!(got == expect)) {
                details = "delta part, tree " + tree_key(t);
                return false;
              }
            }
            // del_j-parts against precomposition with the coboundary
            for (int j = 1; j <= ty.n(); ++j) {
              const int kj = ty.ks[static_cast<size_t>(j) - 1];
              if (kj == 0) continue;
              // fresh arity-(kj-1) cochain with two table entries
              SymbolicCochain fj;
              fj.arity = kj - 1;
              {
                std::vector<Monomial> key1, key2;
                for (int p = 0; p < kj - 1; ++p) key1.push_back(Monomial{100 + p});
                for (int p = 0; p < kj - 1; ++p) key2.push_back(Monomial{200 + p, 300 + p});
                fj.table[key1] = AlgebraElement::generator(77);
                fj.table[key2] = AlgebraElement::monomial(Monomial{78, 79});
              }
              std::vector<SymbolicCochain> fs = w.fs;
              fs[static_cast<size_t>(j) - 1] = fj;
              std::vector<AlgebraElement> args = generator_args(ty.l);
              TreeType dty = ty;
              dty.ks[static_cast<size_t>(j) - 1] = kj - 1;
              AlgebraElement got;
              auto it = dt.find(dty);
              if (it != dt.end()) got = evaluate(it->second, fs, args);
              MultilinearFn dfj = [&](const std::vector<Monomial>& v) {
                return hochschild_coboundary(
                    [&](const std::vector<Monomial>& u) { return fj(u); }, kj - 1, v);
              };
              int kappa = 0;
              for (int m = 0; m < j - 1; ++m) kappa += ty.ks[static_cast<size_t>(m)];
              // placeholder arity fix for the overridden slot
              std::vector<SymbolicCochain> fs_over = w.fs;
              AlgebraElement expect =
                  evaluate_override(t, ty, fs_over, args, j, dfj);
              long long sg = -sgn_pow(ty.l + ty.ksum() + kappa);
              AlgebraElement expect_signed;
              expect_signed.add_scaled(expect, sg);
              if (!(got == expect_signed)) {
                details = "del part j=" + std::to_string(j) + ", tree " + tree_key(t);
                return false;
              }
            }
          }
          return true;
        });
  s.run("the total unit is a cycle", [&](std::string& details) {
    // The operad unit of the totalized arity-1 component is the sum of all
    // corollas; its differential telescopes: the raising part of the k-th
    // corolla cancels the lowering part of the (k+1)-st.
    for (int k = 0; k <= 3; ++k) {
      auto corolla = [](int arity) {
        std::vector<Tree> ch;
        for (int p = 1; p <= arity; ++p) ch.push_back(leg(p));
        return white(1, ch);
      };
      TreeSum acc = delta_part(corolla(k), TreeType{k, {k}}, conv);
      acc.add_scaled(del_part(corolla(k + 1), TreeType{k + 1, {k + 1}}, 1, conv), -1);
      if (!acc.is_zero()) {
        details = "unit sum not closed between colours " + std::to_string(k) + ", " +
                  std::to_string(k + 1);
        return false;
      }
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Suite: acyclicity (free crossed extension of the standard duals)
// ---------------------------------------------------------------------------

void suite_acyclicity(Suite& s, int qmax, int N) {
  for (int q = 0; q <= qmax; ++q) {
    s.run("free crossed extension of D[" + std::to_string(q) + "] acyclic both routes",
          [&, q](std::string& details) {
            CosimplicialGroup D = build_D(q, N);
            CochainComplex direct = nerve(free_crossed(D));
            auto h_direct = homology(direct, 0, N - 1);
            // decomposition route
            std::map<int, HomologySummary> h_dec;
            for (int t = 0; t <= N - 1; ++t) h_dec[t] = HomologySummary{};
            auto add_in = [&](const CochainComplex& c) {
              auto h = homology(c, 0, N - 1);
              for (int t = 0; t <= N - 1; ++t) {
                h_dec[t].betti += h[t].betti;
                for (const Int& v : h[t].torsion) h_dec[t].torsion.push_back(v);
              }
            };
            add_in(nerve(D));
            for (int m = 2; m <= N - 1; ++m)
              for (const Perm& chi : simple_perms(m))
                for (const auto& xs : d_tuples(q, m)) {
                  SummandKey key;
                  key.unit = false;
                  key.chi = chi;
                  key.xs = xs;
                  add_in(summand_complex(q, key, N));
                }
            for (int t = 0; t <= N - 1; ++t) {
              std::sort(h_dec[t].torsion.begin(), h_dec[t].torsion.end());
              if (!(h_direct[t] == h_dec[t])) {
                details = "degree " + std::to_string(t) + ": direct " + h_direct[t].str() +
                          " vs decomposition " + h_dec[t].str();
                return false;
              }
              HomologySummary expect;
              expect.betti = (t == 0) ? 1 : 0;
              if (!(h_direct[t] == expect)) {
                details = "degree " + std::to_string(t) + ": " + h_direct[t].str();
                return false;
              }
            }
            return true;
          });
  }
  s.run("extended duals are acyclic in all degrees (window), q <= 4", [&](std::string& details) {
    for (int q = 0; q <= 4; ++q) {
      CochainComplex c = nerve_Dhat(q, 6);
      auto h = homology(c, -1, 5);
      for (auto& [t, v] : h)
        if (v.betti != 0 || !v.torsion.empty()) {
          details = "q=" + std::to_string(q) + " degree " + std::to_string(t);
          return false;
        }
    }
    return true;
  });
  s.run("H^0 of the plain dual is Z, H^{>=1} vanishes (q <= 3)", [&](std::string& details) {
    for (int q = 0; q <= 3; ++q) {
      CochainComplex c = nerve(build_D(q, 5));
      auto h = homology(c, 0, 4);
      for (auto& [t, v] : h) {
        long expect = t == 0 ? 1 : 0;
        if (v.betti != expect || !v.torsion.empty()) {
          details = "q=" + std::to_string(q) + " degree " + std::to_string(t);
          return false;
        }
      }
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Suite: decomposition (rank identity and coboundary invariance)
// ---------------------------------------------------------------------------

void suite_decomposition(Suite& s) {
  s.run("rank identity per summand, q <= 3, n <= 6", [](std::string& details) {
    for (int q = 0; q <= 3; ++q) {
      auto infos = decompose_ranks(q, 6);
      std::vector<long> total(7, 0);
      for (const auto& info : infos) {
        for (int n = 0; n <= 6; ++n) {
          total[static_cast<size_t>(n)] += info.rank_per_degree[static_cast<size_t>(n)];
          long expect = summand_rank_formula(q, info.key, n);
          if (info.rank_per_degree[static_cast<size_t>(n)] != expect) {
            details = "q=" + std::to_string(q) + " key " + info.key.str() + " degree " +
                      std::to_string(n) + ": " +
                      std::to_string(info.rank_per_degree[static_cast<size_t>(n)]) + " vs " +
                      std::to_string(expect);
            return false;
          }
        }
      }
      for (int n = 0; n <= 6; ++n)
        if (total[static_cast<size_t>(n)] != dim_D(q, n) * factorial(n)) {
          details = "q=" + std::to_string(q) + " total at degree " + std::to_string(n);
          return false;
        }
    }
    return true;
  });
  s.run("summands invariant under the coboundary, q <= 2, n <= 4", [](std::string& details) {
    for (int q = 0; q <= 2; ++q)
      for (int n = 0; n <= 4; ++n)
        for (const Perm& sigma : all_perms(n))
          for (const auto& a : d_tuples(q, n)) {
            SummandKey key = classify_summand(a, sigma);
            for (int i = 0; i <= n + 1; ++i) {
              const Perm tsig = coface(sigma, i);
              const int bi = bar_index(sigma, i);
              // coface of the tuple at the twisted index
              const int lo = (bi - 1 >= 0) ? a[static_cast<size_t>(bi) - 1] : 0;
              const int hi = (bi <= n - 1 && bi <= static_cast<int>(a.size()) - 1)
                                 ? a[static_cast<size_t>(bi)]
                                 : q;
              for (int v = lo; v <= hi; ++v) {
                std::vector<int> b = a;
                b.insert(b.begin() + bi, v);
                if (!(classify_summand(b, tsig) == key)) {
                  details = "q=" + std::to_string(q) + " sigma=" + sigma.str() +
                            " i=" + std::to_string(i);
                  return false;
                }
              }
            }
          }
    return true;
  });
  s.run("classification of the ten-strand example", [](std::string& details) {
    Perm sigma({1, 2, 5, 6, 7, 3, 4, 9, 8, 10});
    if (!(contract(sigma) == Perm({2, 1, 4, 3}))) {
      details = "contraction";
      return false;
    }
    std::vector<int> a;
    for (int j = 0; j <= 10; ++j) a.push_back(j);
    SummandKey key = classify_summand(a, sigma);
    if (key.xs != std::vector<int>{2, 4, 7, 8, 9}) {
      details = "kept entries";
      return false;
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Suite: totalization (homotopy invariance of the free crossed extension)
// ---------------------------------------------------------------------------

CosimplicialGroup random_dual_cosimplicial(int q, int N, std::mt19937_64& rng) {
  // a random downward-closed family of faces of the q-simplex, dualized
  std::vector<std::set<int>> faces;
  std::set<std::set<int>> family;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int mask = 1; mask < (1 << (q + 1)); ++mask) {
    if (coin(rng)) continue;
    std::set<int> f;
    for (int v = 0; v <= q; ++v)
      if (mask & (1 << v)) f.insert(v);
    family.insert(f);
  }
  if (family.empty()) family.insert({0});
  // close under subsets
  std::set<std::set<int>> closed;
  std::function<void(const std::set<int>&)> close = [&](const std::set<int>& f) {
    if (f.empty() || closed.count(f)) return;
    closed.insert(f);
    for (int v : f) {
      std::set<int> g = f;
      g.erase(v);
      close(g);
    }
  };
  for (const auto& f : family) close(f);
  // X_n = monotone tuples whose support lies in the family
  std::vector<std::vector<std::vector<int>>> basis(static_cast<size_t>(N) + 1);
  std::vector<std::map<std::vector<int>, long>> index(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n)
    for (const auto& t : d_tuples(q, n)) {
      std::set<int> sup(t.begin(), t.end());
      if (!closed.count(sup)) continue;
      index[static_cast<size_t>(n)][t] = static_cast<long>(basis[static_cast<size_t>(n)].size());
      basis[static_cast<size_t>(n)].push_back(t);
    }
  CosimplicialGroup c;
  c.N = N;
  c.dims.resize(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n)
    c.dims[static_cast<size_t>(n)] = static_cast<long>(basis[static_cast<size_t>(n)].size());
  c.cofaces.resize(static_cast<size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    auto& row = c.cofaces[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1,
               SpMat(c.dims[static_cast<size_t>(n)], c.dims[static_cast<size_t>(n) - 1]));
    for (long col = 0; col < c.dims[static_cast<size_t>(n) - 1]; ++col) {
      const auto& a = basis[static_cast<size_t>(n) - 1][static_cast<size_t>(col)];
      for (int i = 0; i <= n; ++i) {
        // dual of face deletion: insert values (same support-closure logic)
        const int lo = (i - 1 >= 0) ? a[static_cast<size_t>(i) - 1] : 0;
        const int hi = (i <= n - 1) ? a[static_cast<size_t>(i)] : q;
        for (int v = lo; v <= hi; ++v) {
          std::vector<int> b = a;
          b.insert(b.begin() + i, v);
          auto it = index[static_cast<size_t>(n)].find(b);
          if (it != index[static_cast<size_t>(n)].end())
            row[static_cast<size_t>(i)].add(it->second, col, 1);
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

ChainFactor random_chain_factor(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 2);
  std::uniform_int_distribution<int> entry(-2, 2);
  ChainFactor v;
  v.dims = {static_cast<long>(dim(rng)), static_cast<long>(dim(rng))};
  SpMat d(v.dims[0], v.dims[1]);
  for (long r = 0; r < v.dims[0]; ++r)
    for (long c = 0; c < v.dims[1]; ++c) d.add(r, c, entry(rng));
  d.finalize();
  v.d = {std::move(d)};
  return v;
}

ChainFactor trivial_chain_factor() {
  ChainFactor v;
  v.dims = {1};
  return v;
}

void suite_totalization(Suite& s) {
  s.run("sign projection is a cochain map and splits the unit, q <= 3", [](std::string& details) {
    for (int q = 0; q <= 3; ++q) {
      const int N = 4;
      CosimplicialGroup D = build_D(q, N);
      CosimplicialGroup F = free_crossed(D);
      CochainComplex nf = nerve(F);
      CochainComplex nd = nerve(D);
      for (int n = 0; n <= N; ++n) {
        SpMat m = miraculous_matrix(D, n);
        SpMat io = unit_inclusion_matrix(D, n);
        if (!equal(multiply(m, io), SpMat::identity(D.dims[static_cast<size_t>(n)]))) {
          details = "m o N(iota) != id at q=" + std::to_string(q);
          return false;
        }
        if (n < N) {
          SpMat lhs = multiply(miraculous_matrix(D, n + 1), nf.d[static_cast<size_t>(n)]);
          SpMat rhs = multiply(nd.d[static_cast<size_t>(n)], m);
          if (!equal(lhs, rhs)) {
            details = "m d != d m at q=" + std::to_string(q) + " n=" + std::to_string(n);
            return false;
          }
        }
      }
    }
    return true;
  });
  s.run("totalized homotopy equivalence for the standard duals", [](std::string& details) {
    const int N = 5;
    for (int q = 0; q <= 2; ++q) {
      CosimplicialGroup D = build_D(q, N);
      ChainFactor v = trivial_chain_factor();
      CochainComplex a = totalize(nerve_bicomplex(D, v));
      CochainComplex b = totalize(nerve_bicomplex(free_crossed(D), v));
      auto ha = homology(a, 0, N - 2);
      auto hb = homology(b, 0, N - 2);
      for (int t = 0; t <= N - 2; ++t)
        if (!(ha[t] == hb[t])) {
          details = "q=" + std::to_string(q) + " degree " + std::to_string(t);
          return false;
        }
    }
    return true;
  });
  s.run("totalized homotopy equivalence on 20 seeded random complexes",
        [&s](std::string& details) {
          const int N = 4;
          for (int rep = 0; rep < 20; ++rep) {
            std::uniform_int_distribution<int> qd(1, 3);
            const int q = qd(s.rng);
            CosimplicialGroup c = random_dual_cosimplicial(q, N, s.rng);
            c.check_identities();
            ChainFactor v = random_chain_factor(s.rng);
            Bicomplex ba = nerve_bicomplex(c, v);
            ba.check_bicomplex();
            CochainComplex a = totalize(ba);
            a.check_complex();
            CochainComplex b = totalize(nerve_bicomplex(free_crossed(c), v));
            b.check_complex();
            auto ha = homology(a, -1, N - 2);
            auto hb = homology(b, -1, N - 2);
            for (int t = -1; t <= N - 2; ++t)
              if (!(ha[t] == hb[t])) {
                details = "rep=" + std::to_string(rep) + " degree " + std::to_string(t) +
                          ": " + ha[t].str() + " vs " + hb[t].str();
                return false;
              }
          }
          return true;
        });
}

// ---------------------------------------------------------------------------
// Suite: genericity
// ---------------------------------------------------------------------------

Tree worked_example_tree() {
  return black({leg(3),
                white(1, {white(2, {black({leg(5), leg(6)}), special(), leg(8)}), leg(1),
                          white(3, {leg(7)})}),
                white(4, {leg(4), special(), leg(2)})});
}

void suite_genericity(Suite& s) {
  s.run("separating-cochain matrix is the identity, l <= 3, sum k <= 3, n <= 2",
        [](std::string& details) {
          for (const TreeType& ty : small_types(3, 3, 2))
            if (!genericity_check(ty)) {
              details = "type " + ty.str();
              return false;
            }
          return true;
        });
  s.run("worked example of the separating construction", [](std::string& details) {
    Tree t = canonicalize(worked_example_tree());
    TreeType ty{8, {3, 3, 1, 3}};
    validate_tree(t, ty);
    SeparatingWitness w = build_separating_witness(t, ty);
    if (w.value_of != std::vector<int>{9, 10, 11, 12}) {
      details = "values";
      return false;
    }
    if (!(w.target == Monomial{3, 9, 12})) {
      details = "target " + mono_str(w.target);
      return false;
    }
    auto expect_entry = [&](int i, const std::vector<Monomial>& key, int value) {
      const auto& f = w.fs[static_cast<size_t>(i) - 1];
      auto it = f.table.find(key);
      return it != f.table.end() && it->second == AlgebraElement::generator(value);
    };
    if (!expect_entry(1, {{10}, {1}, {11}}, 9) || !expect_entry(2, {{5, 6}, {}, {8}}, 10) ||
        !expect_entry(3, {{7}}, 11) || !expect_entry(4, {{4}, {}, {2}}, 12)) {
      details = "table entries";
      return false;
    }
    AlgebraElement v = evaluate(t, ty, w.fs, generator_args(8));
    if (v.coefficient(w.target) != 1) {
      details = "evaluation " + v.str();
      return false;
    }
    return true;
  });
  s.run("exceptional trees evaluate to the argument and to the unit", [](std::string& details) {
    AlgebraElement a = evaluate(leg(1), TreeType{1, {}}, {}, {AlgebraElement::generator(5)});
    if (!(a == AlgebraElement::generator(5))) {
      details = "bare leg";
      return false;
    }
    AlgebraElement u = evaluate(special(), TreeType{0, {}}, {}, {});
    if (!(u == AlgebraElement::unit())) {
      details = "bare special";
      return false;
    }
    return true;
  });
  s.run("composition soundness: insertion matches evaluation", [&s](std::string& details) {
    std::vector<TreeType> pool1 = small_types(3, 3, 2);
    std::vector<TreeType> pool2 = small_types(2, 2, 1);
    std::uniform_int_distribution<size_t> p1(0, pool1.size() - 1);
    std::uniform_int_distribution<size_t> p2(0, pool2.size() - 1);
    int done = 0;
    while (done < 200) {
      TreeType ty1 = pool1[p1(s.rng)];
      if (ty1.n() == 0) continue;
      std::uniform_int_distribution<int> ps(1, ty1.n());
      int slot = ps(s.rng);
      TreeType ty2 = pool2[p2(s.rng)];
      if (ty2.l != ty1.ks[static_cast<size_t>(slot) - 1]) continue;
      auto b1 = enumerate_basis(ty1);
      auto b2 = enumerate_basis(ty2);
      if (b1.empty() || b2.empty()) continue;
      std::uniform_int_distribution<size_t> i1(0, b1.size() - 1), i2(0, b2.size() - 1);
      const Tree& t1 = b1[i1(s.rng)];
      const Tree& t2 = b2[i2(s.rng)];
      Tree comp = insert_tree(t1, ty1, slot, t2, ty2);
      TreeType cty = insert_type(ty1, slot, ty2);
      SeparatingWitness w = build_separating_witness(comp, cty);
      // split the witness cochains between t1 and t2
      std::vector<SymbolicCochain> f2(w.fs.begin() + (slot - 1),
                                      w.fs.begin() + (slot - 1) + ty2.n());
      // evaluate t2 as a multilinear map feeding slot `slot` of t1
      MultilinearFn inner = [&](const std::vector<Monomial>& v) {
        std::vector<AlgebraElement> args;
        for (const Monomial& m : v) args.push_back(AlgebraElement::monomial(m));
        return evaluate(t2, ty2, f2, args);
      };
      std::vector<SymbolicCochain> outer(w.fs.begin(), w.fs.begin() + (slot - 1));
      SymbolicCochain dummy;
      dummy.arity = ty1.ks[static_cast<size_t>(slot) - 1];
      outer.push_back(dummy);
      outer.insert(outer.end(), w.fs.begin() + (slot - 1) + ty2.n(), w.fs.end());
      // both sides take the composite's legs (insertion keeps them)
      AlgebraElement lhs = evaluate(comp, cty, w.fs, generator_args(cty.l));
      AlgebraElement rhs =
          evaluate_override(t1, ty1, outer, generator_args(ty1.l), slot, inner);
      if (!(lhs == rhs)) {
        details = "insertion and evaluation disagree: " + ty1.str() + " o_" +
                  std::to_string(slot) + " " + ty2.str();
        return false;
      }
      if (lhs.coefficient(w.target) != 1) {
        details = "composite does not hit its own witness target";
        return false;
      }
      ++done;
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Suite: category-iso (Span(IS) = one-white-vertex components)
// ---------------------------------------------------------------------------

void suite_category_iso(Suite& s) {
  s.run("realization is a bijection onto the basis, l, k <= 4", [](std::string& details) {
    for (int l = 0; l <= 4; ++l)
      for (int k = 0; k <= 4; ++k) {
        auto morphisms = all_interval_morphisms(l - 1, k - 1);
        std::set<std::string> keys;
        for (const auto& g : morphisms) {
          Tree t = realize_interval(g);
          validate_tree(t, TreeType{l, {k}});
          keys.insert(tree_key(t));
        }
        if (keys.size() != morphisms.size()) {
          details = "not injective at l=" + std::to_string(l) + " k=" + std::to_string(k);
          return false;
        }
        auto basis = enumerate_basis(TreeType{l, {k}});
        if (basis.size() != morphisms.size()) {
          details = "cardinalities differ at l=" + std::to_string(l) +
                    " k=" + std::to_string(k) + ": " + std::to_string(basis.size()) + " vs " +
                    std::to_string(morphisms.size());
          return false;
        }
        for (const Tree& t : basis)
          if (!keys.count(tree_key(t))) {
            details = "missed basis tree at l=" + std::to_string(l) + " k=" + std::to_string(k);
            return false;
          }
      }
    return true;
  });
  s.run("realization functoriality on objects <-1>..<1>", [](std::string& details) {
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (const IntervalMorphism& f1 : all_interval_morphisms(a, b))
            for (const IntervalMorphism& f2 : all_interval_morphisms(b, c)) {
              Tree lhs = realize_interval(compose(f2, f1));
              Tree rhs = insert_tree(realize_interval(f1), realize_type(f1), 1,
                                     realize_interval(f2), realize_type(f2));
              if (!(tree_key(lhs) == tree_key(rhs))) {
                details = "f1=" + f1.str() + " f2=" + f2.str();
                return false;
              }
            }
    return true;
  });
  s.run("realization functoriality, seeded pairs up to <3>", [&s](std::string& details) {
    std::uniform_int_distribution<int> obj(-1, 3);
    int done = 0;
    while (done < 300) {
      const int a = obj(s.rng), b = obj(s.rng), c = obj(s.rng);
      auto h1 = all_interval_morphisms(a, b);
      auto h2 = all_interval_morphisms(b, c);
      if (h1.empty() || h2.empty()) continue;
      std::uniform_int_distribution<size_t> p1(0, h1.size() - 1), p2(0, h2.size() - 1);
      const IntervalMorphism& f1 = h1[p1(s.rng)];
      const IntervalMorphism& f2 = h2[p2(s.rng)];
      Tree lhs = realize_interval(compose(f2, f1));
      Tree rhs = insert_tree(realize_interval(f1), realize_type(f1), 1,
                             realize_interval(f2), realize_type(f2));
      if (!(tree_key(lhs) == tree_key(rhs))) {
        details = "f1=" + f1.str() + " f2=" + f2.str();
        return false;
      }
      ++done;
    }
    return true;
  });
  s.run("realized operation matches the fiber-product formula", [](std::string& details) {
    for (int l = 0; l <= 3; ++l)
      for (int k = 0; k <= 2; ++k)
        for (const IntervalMorphism& g : all_interval_morphisms(l - 1, k - 1)) {
          // one cochain of arity k supported on all needed tuples via a
          // generic table is awkward; use the witness of the realized tree.
          Tree t = realize_interval(g);
          TreeType ty{l, {k}};
          SeparatingWitness w = build_separating_witness(t, ty);
          // direct formula evaluation
          std::vector<AlgebraElement> tensor;
          tensor.push_back(AlgebraElement::unit());
          for (int p = 1; p <= l; ++p) tensor.push_back(AlgebraElement::generator(p));
          tensor.push_back(AlgebraElement::unit());
          auto bars = bar_action(g, tensor);
          std::vector<Monomial> inner;
          bool single = true;
          for (int i = 0; i <= k - 1; ++i) {
            const auto& e = bars[static_cast<size_t>(i) + 1];
            if (e.terms().size() != 1) {
              single = false;
              break;
            }
            inner.push_back(e.terms().begin()->first);
          }
          if (!single) {
            details = "unexpected non-monomial fiber product";
            return false;
          }
          AlgebraElement mid = w.fs[0](inner);
          AlgebraElement expect = multiply(bars.front(), multiply(mid, bars.back()));
          AlgebraElement got = evaluate(t, ty, w.fs, generator_args(l));
          if (!(got == expect)) {
            details = "g=" + g.str();
            return false;
          }
        }
    return true;
  });
  s.run("planar splitting is a bijection compatible with the twists", [&s](std::string& details) {
    for (int l = 0; l <= 4; ++l) {
      for (int k = 0; k <= 3; ++k) {
        for (const Tree& t : enumerate_basis(TreeType{l, {k}})) {
          auto [planar, sigma] = split_labels(t);
          if (!in_planar_suboperad(planar)) {
            details = "split not planar";
            return false;
          }
          if (!(tree_key(join_labels(planar, sigma)) == tree_key(t))) {
            details = "round trip";
            return false;
          }
        }
      }
    }
    // coface compatibility: the splitting intertwines delta faces with the
    // twisted pair structure (d_{hbar(i)} x, d_i h), l <= 3
    for (int l = 0; l <= 3; ++l)
      for (int k = 0; k <= 2; ++k) {
        TreeType ty{l, {k}};
        for (const Tree& t : enumerate_basis(ty)) {
          auto [planar, sigma] = split_labels(t);
          for (int i = 0; i <= l + 1; ++i) {
            Tree face = insert_tree(generator_coface(l, i), TreeType{l + 1, {l}}, 1, t, ty);
            auto [fplanar, fsigma] = split_labels(face);
            if (!(fsigma == coface(sigma, i))) {
              details = "face permutation at l=" + std::to_string(l) +
                        " i=" + std::to_string(i) + " tree " + tree_key(t);
              return false;
            }
            Tree pface = insert_tree(generator_coface(l, bar_index(sigma, i)),
                                     TreeType{l + 1, {l}}, 1, planar, ty);
            auto [ppl, psig] = split_labels(pface);
            if (!(tree_key(ppl) == tree_key(fplanar)) || !psig.is_identity()) {
              details = "face planar part at l=" + std::to_string(l) + " i=" + std::to_string(i);
              return false;
            }
          }
        }
      }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Suite: rows (cosimplicial rows are acyclic, the total complex is not)
// ---------------------------------------------------------------------------

void suite_rows(Suite& s) {
  const SignConvention conv = chosen_convention();
  struct RowRange {
    int k;
    int L;
  };
  for (RowRange rr : {RowRange{0, 6}, RowRange{1, 6}, RowRange{2, 5}, RowRange{3, 5}}) {
    s.run("row k=" + std::to_string(rr.k) + " acyclic in degrees 1.." +
              std::to_string(rr.L - 2),
          [rr, &conv](std::string& details) {
            RowComplex rc = row_complex(rr.k, rr.L, conv);
            CochainComplex c;
            c.lo = 0;
            for (auto& b : rc.basis) c.dims.push_back(static_cast<long>(b.size()));
            c.d = rc.d;
            auto h = homology(c, 1, rr.L - 2);
            for (auto& [t, v] : h)
              if (v.betti != 0 || !v.torsion.empty()) {
                details = "degree " + std::to_string(t) + ": " + v.str();
                return false;
              }
            return true;
          });
  }
  s.run("arity-1 total complex has H^0 = Z, stable across truncations",
        [&conv](std::string& details) {
          // Near degree 0 the choice K = L+1 realizes the pure l-quotient
          // truncation, under which the truncated unit sum remains a cycle.
          std::vector<HomologySummary> results;
          for (auto [K, L] : std::vector<std::pair<int, int>>{{4, 3}, {5, 4}}) {
            TruncatedComponent tc = truncated_complex(1, K, L, Suboperad::B, conv);
            CochainComplex c;
            c.lo = tc.lo;
            for (auto& b : tc.basis) c.dims.push_back(static_cast<long>(b.size()));
            c.d = tc.d;
            c.check_complex();
            auto h = homology(c, 0, 0);
            results.push_back(h[0]);
          }
          if (!(results[0] == results[1])) {
            details = "not stable: " + results[0].str() + " vs " + results[1].str();
            return false;
          }
          if (results[0].betti != 1 || !results[0].torsion.empty()) {
            details = "H^0 = " + results[0].str();
            return false;
          }
          return true;
        });
}

// ---------------------------------------------------------------------------
// Suite: disks (homology evidence for the homotopy type)
// ---------------------------------------------------------------------------

void suite_disks(Suite& s) {
  const SignConvention conv = chosen_convention();
  s.run("stub-free arity-0 component is acyclic in the window", [&conv](std::string& details) {
    TruncatedComponent tc = truncated_complex(0, 0, 7, Suboperad::Bhat, conv);
    CochainComplex c;
    c.lo = tc.lo;
    for (auto& b : tc.basis) c.dims.push_back(static_cast<long>(b.size()));
    c.d = tc.d;
    c.check_complex();
    auto h = homology(c, 0, 6);
    for (auto& [t, v] : h)
      if (v.betti != 0 || !v.torsion.empty()) {
        details = "degree " + std::to_string(t) + ": " + v.str();
        return false;
      }
    return true;
  });
  s.run("arity-0 component with the exceptional tree has H^0 = Z", [&conv](std::string& details) {
    TruncatedComponent tc = truncated_complex(0, 0, 6, Suboperad::NormB, conv);
    CochainComplex c;
    c.lo = tc.lo;
    for (auto& b : tc.basis) c.dims.push_back(static_cast<long>(b.size()));
    c.d = tc.d;
    auto h = homology(c, 0, 5);
    for (auto& [t, v] : h) {
      long expect = (t == 0) ? 1 : 0;
      if (v.betti != expect || !v.torsion.empty()) {
        details = "degree " + std::to_string(t) + ": " + v.str();
        return false;
      }
    }
    return true;
  });
  auto expect_disks = [](int n) {
    // Betti numbers of the configuration spaces of n points in the plane,
    // from the Poincare polynomial prod_{i=1}^{n-1} (1 + i t).
    std::vector<long> b{1};
    for (int i = 1; i <= n - 1; ++i) {
      std::vector<long> nb(b.size() + 1, 0);
      for (size_t j = 0; j < b.size(); ++j) {
        nb[j] += b[j];
        nb[j + 1] += i * b[j];
      }
      b = std::move(nb);
    }
    return b;
  };
  for (int n : {2, 3}) {
    s.run("brace suboperad arity " + std::to_string(n) + " has the configuration-space ranks",
          [n, &conv, &expect_disks](std::string& details) {
            std::vector<long> expect = expect_disks(n);
            BraceHomologyResult prev;
            for (int S : {4, 5}) {
              BraceHomologyResult r = brace_suboperad_homology(n, S, conv);
              for (int d = 0; d <= n - 1; ++d) {
                const HomologySummary& h = r.homology.at(-d);
                if (h.betti != expect[static_cast<size_t>(d)] || !h.torsion.empty()) {
                  details = "S=" + std::to_string(S) + " degree -" + std::to_string(d) + ": " +
                            h.str() + " want Z^" + std::to_string(expect[static_cast<size_t>(d)]);
                  return false;
                }
              }
              if (S > 4) {
                for (auto& [deg, h] : r.homology)
                  if (!(prev.homology.at(deg) == h)) {
                    details = "not stable across truncations at degree " + std::to_string(deg);
                    return false;
                  }
              }
              prev = std::move(r);
            }
            return true;
          });
  }
  s.run("degeneracy images are exactly the stub trees (small types)", [](std::string& details) {
    for (const TreeType& ty : small_types(2, 2, 2)) {
      for (int j = 1; j <= ty.n(); ++j) {
        const int kj = ty.ks[static_cast<size_t>(j) - 1];
        // image trees of all degeneracies at slot j, from arity kj-1 donors
        if (kj == 0) continue;
        TreeType src = ty;
        src.ks[static_cast<size_t>(j) - 1] = kj - 1;
        std::set<std::string> image;
        for (const Tree& t : enumerate_basis(src))
          for (int i = 0; i <= kj - 1; ++i) {
            Tree st = insert_tree(t, src, j, generator_codegeneracy(kj - 1, i),
                                  TreeType{kj - 1, {kj}});
            image.insert(tree_key(st));
          }
        std::set<std::string> stubby;
        std::function<bool(const Tree&, int)> stub_at_j = [&](const Tree& t, int target) {
          if (t.kind == NodeKind::White && t.label == target)
            for (const Tree& c : t.children)
              if (c.kind == NodeKind::Special) return true;
          for (const Tree& c : t.children)
            if (stub_at_j(c, target)) return true;
          return false;
        };
        for (const Tree& t : enumerate_basis(ty))
          if (stub_at_j(t, j)) stubby.insert(tree_key(t));
        if (image != stubby) {
          details = "type " + ty.str() + " slot " + std::to_string(j);
          return false;
        }
      }
    }
    return true;
  });
  s.run("brace and cup generators close under the differential (small arities)",
        [&conv](std::string& details) {
          // d of every generator component lies in the span of generator
          // components of adjacent colours; verified inside the span
          // machinery which throws on failure.
          for (int n : {2, 3}) {
            BraceHomologyResult r = brace_suboperad_homology(n, 4, conv);
            if (!r.closed) {
              details = "arity " + std::to_string(n);
              return false;
            }
          }
          return true;
        });
}

// ---------------------------------------------------------------------------
// Suite: operad axioms (insert associativity, units, equivariance)
// ---------------------------------------------------------------------------

void suite_operad_axioms(Suite& s) {
  s.run("insertion associativity on random small trees", [&s](std::string& details) {
    std::vector<TreeType> pool = small_types(2, 2, 2);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    int done = 0;
    while (done < 500) {
      TreeType ty1 = pool[pick(s.rng)];
      if (ty1.n() == 0) continue;
      std::uniform_int_distribution<int> ps(1, ty1.n());
      int i = ps(s.rng);
      TreeType ty2 = pool[pick(s.rng)];
      if (ty2.l != ty1.ks[static_cast<size_t>(i) - 1]) continue;
      TreeType ty3 = pool[pick(s.rng)];
      auto b1 = enumerate_basis(ty1);
      auto b2 = enumerate_basis(ty2);
      auto b3 = enumerate_basis(ty3);
      if (b1.empty() || b2.empty() || b3.empty()) continue;
      std::uniform_int_distribution<size_t> i1(0, b1.size() - 1), i2(0, b2.size() - 1),
          i3(0, b3.size() - 1);
      const Tree t1 = b1[i1(s.rng)];
      const Tree t2 = b2[i2(s.rng)];
      const Tree t3 = b3[i3(s.rng)];
      // (t1 o_i t2) o_j t3 = t1 o_i (t2 o_j' t3) when j falls inside t2
      if (ty2.n() == 0) continue;
      std::uniform_int_distribution<int> pj(1, ty2.n());
      int j = pj(s.rng);
      if (ty3.l != ty2.ks[static_cast<size_t>(j) - 1]) continue;
      Tree lhs = insert_tree(insert_tree(t1, ty1, i, t2, ty2), insert_type(ty1, i, ty2),
                             i - 1 + j, t3, ty3);
      Tree rhs = insert_tree(t1, ty1, i, insert_tree(t2, ty2, j, t3, ty3),
                             insert_type(ty2, j, ty3));
      if (!(tree_key(lhs) == tree_key(rhs))) {
        details = "associativity mismatch";
        return false;
      }
      ++done;
    }
    return true;
  });
  s.run("corolla units are neutral", [](std::string& details) {
    for (const TreeType& ty : small_types(2, 2, 2)) {
      for (const Tree& t : enumerate_basis(ty)) {
        for (int i = 1; i <= ty.n(); ++i) {
          int k = ty.ks[static_cast<size_t>(i) - 1];
          std::vector<Tree> ch;
          for (int p = 1; p <= k; ++p) ch.push_back(leg(p));
          Tree unit = white(1, ch);
          Tree got = insert_tree(t, ty, i, unit, TreeType{k, {k}});
          if (!(tree_key(got) == tree_key(t))) {
            details = "right unit at " + ty.str();
            return false;
          }
        }
        if (ty.n() >= 1) {
          // left unit: insert t into the corolla of its output colour
          std::vector<Tree> ch;
          for (int p = 1; p <= ty.l; ++p) ch.push_back(leg(p));
          Tree unit = white(1, ch);
          Tree got = insert_tree(unit, TreeType{ty.l, {ty.l}}, 1, t, ty);
          if (!(tree_key(got) == tree_key(t))) {
            details = "left unit at " + ty.str();
            return false;
          }
        }
      }
    }
    return true;
  });
  s.run("identity cochain tree splices out arity-1 slots", [](std::string& details) {
    Tree t = white(1, {leg(1)});
    Tree got = insert_tree(t, TreeType{1, {1}}, 1, leg(1), TreeType{1, {}});
    if (!(tree_key(got) == "L1")) {
      details = tree_key(got);
      return false;
    }
    return true;
  });
  s.run("insertion equivariance under white relabelling", [&s](std::string& details) {
    std::vector<TreeType> pool = small_types(2, 2, 2);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    int done = 0;
    while (done < 200) {
      TreeType ty1 = pool[pick(s.rng)];
      if (ty1.n() == 0) continue;
      std::uniform_int_distribution<int> ps(1, ty1.n());
      int i = ps(s.rng);
      TreeType ty2 = pool[pick(s.rng)];
      if (ty2.l != ty1.ks[static_cast<size_t>(i) - 1]) continue;
      auto b1 = enumerate_basis(ty1);
      auto b2 = enumerate_basis(ty2);
      if (b1.empty() || b2.empty()) continue;
      std::uniform_int_distribution<size_t> i1(0, b1.size() - 1), i2(0, b2.size() - 1);
      const Tree t1 = b1[i1(s.rng)];
      const Tree t2 = b2[i2(s.rng)];
      auto perms = all_perms(ty2.n());
      std::uniform_int_distribution<size_t> pp(0, perms.size() - 1);
      const Perm tau = perms[pp(s.rng)];
      // (t1 o_i (t2 tau)) equals (t1 o_i t2) acted by the block permutation
      Tree lhs = insert_tree(t1, ty1, i, sym_act(t2, tau), sym_act_type(ty2, tau));
      std::vector<int> block(static_cast<size_t>(ty1.n()) + static_cast<size_t>(ty2.n()) - 1);
      for (int p = 1; p < i; ++p) block[static_cast<size_t>(p) - 1] = p;
      for (int p = 1; p <= ty2.n(); ++p)
        block[static_cast<size_t>(i + p - 2)] = i - 1 + tau(p);
      for (int p = i + 1; p <= ty1.n(); ++p)
        block[static_cast<size_t>(p + ty2.n() - 2)] = p + ty2.n() - 1;
      Perm btau{block};
      Tree rhs = sym_act(insert_tree(t1, ty1, i, t2, ty2), btau);
      if (!(tree_key(lhs) == tree_key(rhs))) {
        details = "equivariance";
        return false;
      }
      ++done;
    }
    return true;
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"sign-identity",  "crossed-relations", "differential", "operad-axioms",
          "acyclicity",     "decomposition",     "totalization", "genericity",
          "category-iso",   "rows",              "disks"};
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const std::string& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, uint64_t seed) {
  Suite s(name, seed);
  const auto t0 = Clock::now();
  if (name == "sign-identity") {
    suite_sign_identity(s);
    suite_confluence(s);
  } else if (name == "crossed-relations") {
    suite_crossed_relations(s);
  } else if (name == "differential") {
    suite_differential(s);
  } else if (name == "operad-axioms") {
    suite_operad_axioms(s);
  } else if (name == "acyclicity") {
    suite_acyclicity(s, 3, 6);
  } else if (name == "decomposition") {
    suite_decomposition(s);
  } else if (name == "totalization") {
    suite_totalization(s);
  } else if (name == "genericity") {
    suite_genericity(s);
  } else if (name == "category-iso") {
    suite_category_iso(s);
  } else if (name == "rows") {
    suite_rows(s);
  } else if (name == "disks") {
    suite_disks(s);
  } else if (name == "all") {
    for (const std::string& n : suite_names()) {
      SuiteResult r = run_suite(n, seed);
      for (CheckResult& c : r.checks) {
        c.name = n + ": " + c.name;
        s.result.checks.push_back(std::move(c));
      }
    }
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  s.result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return s.result;
}

}  // namespace natop
