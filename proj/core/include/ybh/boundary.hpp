#pragma once

#include "ybh/face_maps.hpp"
#include "ybh/matrix.hpp"

namespace ybh {

// Sparse matrix of the boundary C_n -> C_{n-1} in the lexicographic bases.
// Entries are sorted by (col, row); zero coefficients are never stored.
struct BoundaryMatrix {
  struct Entry {
    int row, col;
    IntPoly v;
  };

  ComplexSpec spec;
  int n = 0;
  std::vector<Tuple> col_basis;  // degree n
  std::vector<Tuple> row_basis;  // degree n - 1
  std::vector<Entry> entries;

  int rows() const { return static_cast<int>(row_basis.size()); }
  int cols() const { return static_cast<int>(col_basis.size()); }

  PolyMat dense() const;
  // Specialization at an integer value of t.
  IntMat dense_at(const Int& t) const;
};

// Assembles the boundary in degree n, sharing one face engine across the
// whole basis so common prefixes and suffixes are expanded once.
BoundaryMatrix boundary_matrix(const ComplexSpec& spec, int n, FaceEngine& eng);
BoundaryMatrix boundary_matrix(const ComplexSpec& spec, int n);

// Checks d_n . d_{n+1} == 0 by sparse column propagation; `lower` is the
// boundary out of degree n and `upper` the one out of degree n + 1.
bool verify_boundary_squared(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

}  // namespace ybh
