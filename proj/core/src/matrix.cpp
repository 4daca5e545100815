#include "ybh/matrix.hpp"

namespace ybh {

namespace {

bool entry_zero(const Int& x) { return x.is_zero(); }
bool entry_zero(const IntPoly& p) { return p.is_zero(); }

Int exact_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a) throw std::logic_error("bareiss: inexact integer division");
  return q;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  auto q = a.divided_exactly_by(b);
  if (!q) throw std::logic_error("bareiss: inexact polynomial division");
  return *q;
}

// Single-step Bareiss with full pivoting.  Returns the rank; when det_out is
// non-null the matrix must be square and *det_out receives the determinant.
// Entries at step k are (k+1)x(k+1) minors of the input, so division by the
// previous pivot is exact.  Fine for the small matrices this is used on.
template <class T>
int bareiss(Mat<T>& m, T* det_out) {
  const int r = m.rows(), c = m.cols();
  int sign = 1;
  T prev = T(1);
  int k = 0;
  for (; k < r && k < c; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < r && pi < 0; ++i)
      for (int j = k; j < c; ++j)
        if (!entry_zero(m.at(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != k) {
      m.swap_rows(pi, k);
      sign = -sign;
    }
    if (pj != k) {
      m.swap_cols(pj, k);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < c; ++j) {
        T num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_div(num, prev);
      }
      m.at(i, k) = T(0);
    }
    prev = m.at(k, k);
  }
  if (det_out) {
    if (r != c) throw std::invalid_argument("bareiss: determinant of non-square matrix");
    if (k < r)
      *det_out = T(0);
    else
      *det_out = sign < 0 ? -prev : prev;
  }
  return k;
}

}  // namespace

Int bareiss_det(IntMat m) {
  Int d;
  bareiss(m, &d);
  return d;
}

IntPoly bareiss_det(PolyMat m) {
  IntPoly d;
  bareiss(m, &d);
  return d;
}

int rank_elimination(IntMat m) { return bareiss<Int>(m, nullptr); }
int rank_elimination(PolyMat m) { return bareiss<IntPoly>(m, nullptr); }

bool is_unimodular(const PolyMat& m) {
  if (m.rows() != m.cols()) return false;
  if (m.rows() == 0) return true;
  return bareiss_det(m).is_unit();
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  PolyMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const IntPoly& v = a.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += v * b.at(k, j);
      }
    }
  return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  RatMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const RatPoly& v = a.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += v * b.at(k, j);
      }
    }
  return r;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& v = a.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += v * b.at(k, j);
      }
    }
  return r;
}

PolyMat to_poly_mat(const IntMat& m) {
  PolyMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r.at(i, j) = IntPoly(m.at(i, j));
  return r;
}

IntMat eval_mat(const PolyMat& m, const Int& t) {
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r.at(i, j) = m.at(i, j).eval(t);
  return r;
}

}  // namespace ybh
