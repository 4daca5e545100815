#pragma once

#include "ybh/int_poly.hpp"

#include <map>
#include <string>
#include <tuple>

namespace ybh {

// Rank combinatorics for the chain modules.  S~(n,m,u) counts words of
// length n over an m-letter alphabet that use each of u designated letters
// at least once; it equals the rank of the degree-n chain module of
// use_top(m, u, m-u).  Three independent evaluation routes are kept so they
// can police each other.
enum class CountMethod {
  inclusion_exclusion,  // sum of (-1)^i binom(u,i) (m-i)^n
  recurrence,           // S~(n,m,u) = S~(n,m-1,u) + S~(n,m,u+1)
  enumeration,          // walk the actual basis and count
};

// Accepts "inclusion-exclusion", "recurrence", "enumeration"; throws
// std::invalid_argument otherwise.
CountMethod parse_count_method(const std::string& name);

// Stirling numbers of the second kind, S(0,0) = 1.  Requires n, m >= 0.
Int stirling2(int n, int m);

// Requires n >= 0 and 0 <= u <= m.
Int s_tilde(int n, int m, int u, CountMethod method);

// The table of S~(n,m,m-1) = rank of the degree-n final-complex chain module
// on m letters, cross-checked across all three methods.
struct CountTable {
  int max_n = 0;
  int max_m = 0;
  std::map<std::tuple<int, int, int>, Int> values;  // (n,m,u) -> count

  const Int& at(int n, int m, int u) const;
  std::string str() const;  // aligned text, rows m, columns n
  std::string csv() const;
};

// Fills the (n,m,m-1) table for 1 <= n <= max_n, 1 <= m <= max_m.  Throws
// std::logic_error with a diagnostic if the three methods ever disagree.
CountTable rank_table(int max_n, int max_m);

}  // namespace ybh
