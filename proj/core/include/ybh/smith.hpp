#pragma once

#include "ybh/matrix.hpp"

#include <functional>

namespace ybh {

// Sparse column: (row index, value) sorted by row index, no zeros.
using SparseIntVec = std::vector<std::pair<int, Int>>;

struct SmithOptions {
  // Track the row/column transforms P and Q.  Without them only the
  // diagonal (hence rank and torsion) is produced, which is considerably
  // cheaper for rank-only queries.
  bool transforms = true;
  // Re-multiply P*A*Q after the reduction and compare with D entry by
  // entry.  Requires transforms.  A mismatch is an engine bug and throws
  // std::logic_error rather than returning a poisoned decomposition.
  bool verify = true;
  // Called after each settled pivot with (pivots done, upper bound); hook
  // for progress reporting in long jobs.
  std::function<void(int, int)> progress;
};

// D = P * A * Q over Z.  P and Q are products of elementary operations with
// determinant +-1 each, so the diagonal entries are the elementary divisors
// of A up to sign; they are normalized nonnegative with d_i | d_{i+1}.
struct SmithIntResult {
  std::vector<Int> diag;  // length min(rows, cols)
  int rank = 0;

  bool with_transforms = false;
  IntMat p;                          // rows x rows, dense
  std::vector<SparseIntVec> q_cols;  // columns of Q (cols x cols)
  Int det_p = 1, det_q = 1;          // both in {+1, -1}
  bool verified = false;

  IntMat q_dense() const;
  // Diagonal entries > 1, i.e. the torsion invariants of the cokernel.
  std::vector<Int> torsion() const;
};

SmithIntResult snf_integer(const IntMat& a, const SmithOptions& opt = {});

// Smith form over the Euclidean domain Q[t], computed fraction-free: the
// working matrix stays in Z[t] (rows are rescaled by integers and stripped
// of integer content), while P and Q absorb the rational factors.  The
// diagonal is reported as primitive integer polynomials, sign-normalized,
// with d_i | d_{i+1} in Q[t].
struct SmithPolyResult {
  std::vector<IntPoly> diag;
  int rank = 0;

  bool with_transforms = false;
  RatMat p, q;
  Rat det_p = Rat(1), det_q = Rat(1);
  bool verified = false;

  // Set by certify_over_Zt: rescaled transforms that are Z[t] matrices with
  // determinant +-1, making coker(A) = (+) k/(d_i) valid over k = Z[t]
  // itself, not just over Q[t].
  bool certified = false;
  PolyMat pz, qz;

  std::vector<IntPoly> torsion() const;  // non-unit, nonzero entries
};

SmithPolyResult snf_poly(const PolyMat& a, const SmithOptions& opt = {});

// Attempts to rescale the rows of P and columns of Q by rational units so
// both become Z[t] matrices of determinant +-1 while P*a0*Q = D still holds
// (a0 is the matrix that produced dec).  Z[t] is not a PID, so this can
// fail; the return value says whether it succeeded.  On success the exact
// integer residual is re-verified and pz/qz/certified are filled in.
bool certify_over_Zt(SmithPolyResult& dec, const PolyMat& a0);

// Rank shortcuts (no transforms, no residual).
int rank_over_Qt(const PolyMat& a);
int rank_over_Z(const IntMat& a);

}  // namespace ybh
