#pragma once

#include "ybh/int_poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ybh {

// Letters are 1-based indices into the ordered alphabet v_1 < ... < v_m.
using Letter = std::uint8_t;

// A basis word of V^{(tensor n)}; operator< on std::vector gives the
// lexicographic order used for every basis enumeration.
using Tuple = std::vector<Letter>;

// Formal k-linear combination of basis words with Z[t] coefficients.
using ChainVector = std::map<Tuple, IntPoly>;

// Adds c * x, erasing the entry if the coefficient cancels to zero.
void add_term(ChainVector& v, const Tuple& x, const IntPoly& c);
void add_scaled(ChainVector& v, const ChainVector& w, const IntPoly& c);

// The normalized operator R on V (tensor) V acts on an ordered pair of
// letters by
//
//   R(a (x) b) = b (x) a                          if a >= b,
//   R(a (x) b) = (1-t) a (x) b + t b (x) a        if a < b,
//
// with t = y^2.  Every column of the matrix of R sums to 1 (the operator is
// column-unital), which is what makes the left and right wall deletions of
// the face maps compatible.
struct RPair {
  Letter c, d;
  const IntPoly* w;  // points at one of the shared constants below
};

struct RImage {
  RPair term[2];
  int count;
};

// Expansion of R(a (x) b) as at most two weighted pairs.
RImage apply_R(Letter a, Letter b);

// Matrix entry R^{ab}_{cd}: the coefficient of c (x) d in R(a (x) b).
IntPoly boltzmann_weight(Letter a, Letter b, Letter c, Letter d);

// Checks (R (x) I)(I (x) R)(R (x) I) == (I (x) R)(R (x) I)(I (x) R) on
// V^(tensor 3) symbolically for an alphabet of m letters.
bool verify_ybe(int m);

// Checks that each column of R sums to 1.
bool verify_column_unital(int m);

// "(1,2,3)"; the empty word prints as "()".
std::string word_str(const Tuple& x);
// "(1 - y^2)(1,2) + (y^2)(2,1)", terms in lexicographic word order; "0" for
// the zero chain.
std::string chain_str(const ChainVector& v);

}  // namespace ybh
