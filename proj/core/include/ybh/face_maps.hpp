#pragma once

#include "ybh/complex_spec.hpp"

#include <cstdint>
#include <vector>

namespace ybh {

// All basis words of the complex in degree n, in lexicographic order.
// Degree 0 is the empty word for `full` (and for use_top with nothing
// required); constrained complexes have empty low degrees.
std::vector<Tuple> enumerate_basis(const ComplexSpec& spec, int n);

// Face maps of the full tensor complex, computed by the recursion the
// diagrams suggest rather than by materializing R^(tensor k).
//
// d_i^l slides the i-th strand to the left wall and deletes it there.  Each
// crossing with the strand one slot to the left applies R to that pair of
// letters, so with W_j denoting "slide the j-th strand of a j-letter word
// out at the left wall":
//
//   W_1(a)            = 1 * (empty word)
//   W_j(a_1..a_j)     = sum over R(a_{j-1}, a_j) -> (c, d) with weight w of
//                       w * [ W_{j-1}(a_1..a_{j-2}, c)  (x)  d ]
//
// and d_i^l(x) = W_i(x_1..x_i) (x) (x_{i+1}..x_n): the moving strand carries
// the first output letter c of each crossing further left while d stays
// behind, and the suffix to the right of slot i just rides along.  d_i^r is
// the mirror image (slide strand i rightwards, delete at the right wall).
//
// The two memo tables cache W-values keyed by the letter word, which makes
// whole-basis boundary assembly roughly linear in the number of distinct
// prefixes instead of exponential in n.  Weights live in Z[t].
class FaceEngine {
 public:
  // 1-based i with 1 <= i <= |x|; the result is supported on words of
  // length |x| - 1 over the same alphabet.
  ChainVector face_left(int i, const Tuple& x);
  ChainVector face_right(int i, const Tuple& x);

  void clear();

 private:
  const ChainVector& wleft(const Tuple& prefix);
  const ChainVector& wright(const Tuple& suffix);

  std::map<Tuple, ChainVector> left_, right_;
};

// Convenience wrappers using a throwaway engine.
ChainVector face_left(int i, const Tuple& x);
ChainVector face_right(int i, const Tuple& x);

// Boundary of a single basis word in the given complex:
//   d(x) = sum_{i=1}^{n} (-1)^i (d_i^l(x) - d_i^r(x)),
// followed by the projection the complex variant prescribes.
ChainVector boundary_of(const ComplexSpec& spec, const Tuple& x, FaceEngine& eng);

// Drops the terms the complex kills (no-op for subcomplex variants).
ChainVector project_chain(const ComplexSpec& spec, const ChainVector& v);

// Checks the precubic relations d_i^e d_j^f = d_{j-1}^f d_i^e (i < j, all
// four flavor combinations) on every basis word of degree n, applying the
// complex's projection after each step.
bool verify_precubic(const ComplexSpec& spec, int n);

}  // namespace ybh
