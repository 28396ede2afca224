#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "natop/complexes.hpp"
#include "natop/operad.hpp"

namespace natop {

/// An element of the brace suboperad at fixed arity, presented by the rule
/// producing its component in each colour tuple (zero TreeSum allowed).
struct SpanElement {
  std::string name;
  int arity = 0;
  int degree = 0;
  std::function<TreeSum(const std::vector<int>& ks)> component;
};

SpanElement cup_span();
SpanElement brace_span(int r);  // f{g_2..g_r}, degree -(r-1)
SpanElement compose_span(const SpanElement& a, int i, const SpanElement& b,
                         const SignConvention& conv);
SpanElement twist_span(const SpanElement& a, const Perm& sigma);

/// The generating words of the stub-free brace suboperad at arity n <= 3,
/// grouped by degree (0 down to -(n-1)), including all symmetric twists.
std::map<int, std::vector<SpanElement>> brace_words(int n, const SignConvention& conv);

struct BraceHomologyResult {
  int n = 0;
  int S = 0;                       // colour-sum cut; window is sum <= S-1
  std::map<int, long> span_rank;   // lattice rank per degree
  std::map<int, HomologySummary> homology;
  bool closed = true;              // d lands in the span on the window
};

/// Homology of the arity-n stub-free brace suboperad on the colour-sum
/// window, computed from the generator span with exact integer lattice
/// reduction.  Throws if d leaves the span (closure failure).
BraceHomologyResult brace_suboperad_homology(int n, int S, const SignConvention& conv);

}  // namespace natop
