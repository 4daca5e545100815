#pragma once

#include "ybh/boundary.hpp"

namespace ybh {

// Reverse-and-complement duality on words over 1..m:
//   tau(a_1,...,a_n) = (m+1-a_n, ..., m+1-a_1).
Tuple tau(const Tuple& x, int m);
ChainVector tau_chain(const ChainVector& v, int m);

// Checks, on every word of Full(m) in degree n, that
//   tau d_i^l = d_{n+1-i}^r tau   for every i, and
//   tau(d(x)) = (-1)^n d(tau(x)),
// i.e. that (-1)^{n-1} tau is a chain map.
bool verify_tau_duality(int m, int n);

// A map of alphabets 1..m_from -> 1..m_to, tabulated.  Order-preserving
// letter maps act diagonally on words and induce chain maps.
struct LetterMap {
  int m_from = 0, m_to = 0;
  std::vector<Letter> image;  // image[a-1] is where letter a goes

  static LetterMap identity(int m);
  // The strict map i -> i+1 into an alphabet with one more letter.
  static LetterMap shift(int m);
  static LetterMap from(int m_from, int m_to, const std::vector<int>& img);

  Letter operator()(Letter a) const { return image[static_cast<size_t>(a) - 1]; }
  Tuple apply(const Tuple& x) const;

  bool weakly_order_preserving() const;
  bool strictly_order_preserving() const;
};

// f then g, as a letter map (g o f).
LetterMap compose(const LetterMap& g, const LetterMap& f);

// f applied letterwise to every word of the combination.  Coefficients of
// words that collide are added (this is exactly how weakly order-preserving
// maps can merge words).
ChainVector map_chain(const LetterMap& f, const ChainVector& v);

// The matrix of f applied letterwise in degree n, columns indexed by the
// basis of `from` and rows by the basis of `to`, with the target complex's
// projection applied.  Entries are 0 or 1.
struct ChainMapMatrix {
  ComplexSpec from, to;
  int n = 0;
  std::vector<Tuple> col_basis, row_basis;
  std::vector<BoundaryMatrix::Entry> entries;  // sorted by (col, row)

  int rows() const { return static_cast<int>(row_basis.size()); }
  int cols() const { return static_cast<int>(col_basis.size()); }
  PolyMat dense() const;
};

// Full(m_from) -> Full(m_to).  Throws std::invalid_argument unless f is
// weakly order-preserving (other maps do not commute with the boundary).
ChainMapMatrix induced_chain_map(const LetterMap& f, int n);

// Between constrained complexes.  Besides order preservation this checks
// that f descends: every degree-n word killed by `from` must map to a word
// killed by `to`, otherwise the induced map on the quotient is not
// well-defined and std::invalid_argument is thrown.
ChainMapMatrix induced_chain_map(const LetterMap& f, const ComplexSpec& from,
                                 const ComplexSpec& to, int n);

// The well-definedness condition above, as a predicate over degree n.
bool descends(const LetterMap& f, const ComplexSpec& from, const ComplexSpec& to, int n);

// Chain-map equation d_to(f(x)) = f(d_from(x)) on every degree-n basis word.
bool verify_chain_map(const LetterMap& f, const ComplexSpec& from,
                      const ComplexSpec& to, int n);

// Stronger, face-map-level naturality on full complexes: f commutes with
// each d_i^l and d_i^r separately (holds for every weakly order-preserving
// map, since f (x) f commutes with R).
bool verify_facemap_naturality(const LetterMap& f, int n);

// The split monomorphism alpha: C^{m-1,u} -> C^{m,u} induced by the strict
// map skipping letter m-u, together with its left inverse alpha_bar induced
// by the weak map folding m-u down onto m-u-1.  Requires u < m-1: the fold
// needs a letter below the required block to land on.
struct SplittingPair {
  LetterMap alpha, alpha_bar;
  ComplexSpec from;  // C^{m-1,u}
  ComplexSpec to;    // C^{m,u}
};

SplittingPair splitting_pair(int m, int u);

// Verifies at degree n that alpha and alpha_bar descend, that both are chain
// maps between the constrained complexes, and that alpha_bar o alpha is the
// identity on the basis of C^{m-1,u}.
bool verify_split(int m, int u, int n);

}  // namespace ybh
