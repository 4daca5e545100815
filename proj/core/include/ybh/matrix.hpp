#pragma once

#include "ybh/int_poly.hpp"
#include "ybh/rat_poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ybh {

// Dense row-major matrix.  All the exact linear algebra in this code base
// stays small enough (a few hundred rows) that dense storage of the working
// matrix is the simplest correct choice; only Smith transforms of the big
// integer specializations get a sparse representation (see smith_int).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), T());
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using PolyMat = Mat<IntPoly>;
using RatMat = Mat<RatPoly>;

PolyMat mat_mul(const PolyMat& a, const PolyMat& b);
RatMat mat_mul(const RatMat& a, const RatMat& b);
IntMat mat_mul(const IntMat& a, const IntMat& b);

// Exact determinant by Bareiss single-step fraction-free elimination; valid
// over any integral domain with exact division (Int and IntPoly here).
// Intended for small matrices (unimodularity checks, tests); the Smith
// engines track determinants of their transforms incrementally instead.
Int bareiss_det(IntMat m);
IntPoly bareiss_det(PolyMat m);

// Rank over the fraction field, by fraction-free elimination with per-row
// content stripping (content only changes rows by units of the fraction
// field, so the rank is unaffected).
int rank_elimination(IntMat m);
int rank_elimination(PolyMat m);

// det(M) in {+1, -1} over Z[t].
bool is_unimodular(const PolyMat& m);

PolyMat to_poly_mat(const IntMat& m);
IntMat eval_mat(const PolyMat& m, const Int& t);

}  // namespace ybh
