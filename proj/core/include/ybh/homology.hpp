#pragma once

#include "ybh/boundary.hpp"
#include "ybh/smith.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ybh {

// Coefficient domain for a homology computation: the polynomial ring Z[t]
// itself, or the integers after substituting a concrete value for t.
struct Domain {
  bool symbolic = true;
  Int t = 0;  // only meaningful when !symbolic

  static Domain over_zt() { return Domain{}; }
  static Domain at_t(Int v) { return Domain{false, std::move(v)}; }
  // t = y^2, so "at y" squares the argument.
  static Domain at_y(long y) { return at_t(Int(y) * y); }

  // Short stable tag used in cache keys and reports: "zt", "t4", "t9", ...
  std::string tag() const;

  bool operator==(const Domain& o) const {
    return symbolic == o.symbolic && (symbolic || t == o.t);
  }
  bool operator!=(const Domain& o) const { return !(*this == o); }
};

// A finitely generated module presented as free part plus cyclic torsion
// summands.  Torsion invariants live in torsion_poly for the symbolic
// domain and in torsion_int for integer specializations; both lists are
// kept sorted in a canonical order.
//
// The compact "(a,b,c)" notation used throughout reports means: free rank a,
// b summands with invariant 1 - y^2, c summands with invariant 1 - y^4.
// A fourth position, when present, counts invariant (1-y^2)(1+y^2)(1+y^2+y^4);
// its integer images are 3, 15 and 315 at y = 2.
struct HomologyModule {
  Domain domain;
  long free_rank = 0;
  std::vector<IntPoly> torsion_poly;
  std::vector<Int> torsion_int;

  // How the module was obtained: "direct" (from boundary matrices),
  // "assembled" (binomial direct sum of smaller computations), or
  // "closed-form" (evaluated formula).
  std::string provenance = "direct";

  // For symbolic results: whether the Smith decomposition behind the
  // invariants was upgraded to an exact Z[t] identity.  Integer results and
  // closed forms are exact by construction and carry certified = true.
  bool certified = false;

  // Free-form evidence trail (cross-check outcomes, fallback warnings).
  std::vector<std::string> notes;

  bool is_zero() const;
  size_t torsion_count() const {
    return domain.symbolic ? torsion_poly.size() : torsion_int.size();
  }

  // Sorts the torsion lists into their canonical order.
  void canonicalize();

  // Classify the torsion list against the three standard invariants.  The
  // triple form requires every summand to be 1-y^2 or 1-y^4; the quadruple
  // form also admits (1-y^2)(1+y^2)(1+y^2+y^4).  Return false when some
  // summand is none of these.
  bool triple(long& b, long& c) const;
  bool quadruple(long& b, long& c, long& d) const;

  // "(1,8,2)" when the triple/quadruple classification applies, otherwise
  // the free rank followed by the explicit invariant list.
  std::string str() const;
};

struct HomologyOptions {
  // Attempt to certify symbolic Smith transforms over Z[t].
  bool certify = true;
  // When certification fails, corroborate the invariants with independent
  // integer computations at t = 4 and t = 9 and record the outcome in notes.
  bool corroborate = true;
  // Run the residual self-checks inside the Smith engines.
  bool verify = true;
  std::function<void(int, int)> progress;
};

// H_n of the given complex: free rank dim C_n - rank d_n - rank d_{n+1},
// torsion the non-unit elementary divisors of d_{n+1}.  Requires n >= 1.
HomologyModule homology_direct(const ComplexSpec& spec, int n,
                               const Domain& dom,
                               const HomologyOptions& opt = {});

// Just the free rank; skips transforms and torsion entirely.
long free_rank_only(const ComplexSpec& spec, int n, const Domain& dom);

// Direct sum decomposition over the one-top-letter pieces:
//   H_n(C^m) = sum over j of binom(m-1, j-1) copies of H_n(C^{jf}),
// truncated at j = n+1 since the higher pieces have empty chain modules.
// `initial` must supply H_n(C^{jf}) for every j <= min(m, n+1), all over the
// same domain; throws std::invalid_argument otherwise.
HomologyModule assemble_decomposition(
    int m, int n, const std::map<int, HomologyModule>& initial);

// Closed forms for the third and fourth homology of the full complex on m
// letters, as symbolic modules.  Requires m >= 1.
HomologyModule closed_form_h3(int m);
HomologyModule closed_form_h4(int m);

struct CompareResult {
  bool equal = true;
  std::string diff;  // human-readable discrepancy list; empty when equal
};

// Free-rank equality plus multiset equality of torsion invariants.
CompareResult compare(const HomologyModule& a, const HomologyModule& b);

}  // namespace ybh
