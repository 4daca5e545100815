#pragma once

#include "ybh/homology.hpp"

#include <string>
#include <vector>

namespace ybh {

// Evidence harness for the experimental side of the project.  Each check
// probes a finite family of cells, records what was computed next to what
// the pattern predicts, and renders a verdict per cell.  A report never
// claims anything beyond the probed cells, and conjecture output is kept
// strictly separate from the theorem-grade assembly in the homology module.
struct ConjectureCell {
  std::string label;     // which cell, e.g. "m=3,n=4" or "j=2,t=4"
  std::string verdict;   // "consistent" | "violated" | "uncertified"
  std::string expected;  // predicted value, printable
  std::string computed;  // observed value, printable
  std::string detail;    // free text: diffs, corroboration notes

  // Cache paths (relative to the cache root) addressing the artifacts this
  // verdict can be recomputed from.
  std::vector<std::string> cache_keys;
};

struct ConjectureReport {
  std::string conjecture;  // stable id, e.g. "free-rank"
  std::string parameters;  // probed parameter set, printable
  std::vector<ConjectureCell> cells;

  bool all_consistent() const;
  bool any_violated() const;
  std::string str() const;      // aligned text, one line per cell
  std::string to_json() const;  // pretty-printed JSON document
};

// Free rank of H_n of the final complex should be 1 for m <= n+1 and 0
// beyond, which makes the full complex's free rank a binomial sum.  Probes
// every (m, n) in the given rectangle, finals directly and fulls assembled.
ConjectureReport check_free_rank(int max_n, int max_m);

// For the two-letter operator the torsion counts should follow
//   c_n = f_{n+1} - 1   and   b_n = (2^{n+1} + (-1)^n)/3 - f_{n+1}
// with f the Fibonacci numbers.  Probes H_n(C^{2f}) symbolically, n = 2..max_n.
ConjectureReport check_fibonacci_m2(int max_n);

// Fifth homology of the final complex on j letters over Z at t = 4, checked
// against the recorded reference values, with a t = 9 recount.  1 <= j <= 6.
ConjectureReport check_h5(int j);

// The split-word subcomplex: words that are a block over the letters above
// `split` followed by a block over the letters at most `split`.  Verifies
// the product rule d(u,w) = (du, w) + (-1)^{|u|} (u, dw) on every basis word
// up to degree n, the basis-count formula, closure, and whether homology is
// additive across sub / full / quotient (computed symbolically).
ConjectureReport check_kunneth(int m, int split, int n);

// Filtration by top-letter usage: H_n of the capped subcomplex, the final
// complex, and the quotient, over Z at t = at_t, with an additivity verdict
// per row.
ConjectureReport check_mfl_split(int m, int cap, int n, const Int& at_t);

// Candidate invariants (1-t) * [k]_t! for k = 1..max_n, where [k]_t is the
// t-integer 1 + t + ... + t^{k-1}.  At t = 4 these give 3, 15, 315, ...
std::vector<IntPoly> torsion_pattern_candidates(int max_n);

}  // namespace ybh
