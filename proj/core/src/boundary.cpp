#include "ybh/boundary.hpp"

#include <map>
#include <stdexcept>

namespace ybh {

PolyMat BoundaryMatrix::dense() const {
  PolyMat a(rows(), cols());
  for (const Entry& e : entries) a.at(e.row, e.col) = e.v;
  return a;
}

IntMat BoundaryMatrix::dense_at(const Int& t) const {
  IntMat a(rows(), cols());
  for (const Entry& e : entries) a.at(e.row, e.col) = e.v.eval(t);
  return a;
}

BoundaryMatrix boundary_matrix(const ComplexSpec& spec, int n, FaceEngine& eng) {
  if (n < 1) throw std::invalid_argument("boundary_matrix: degree must be >= 1");
  BoundaryMatrix b;
  b.spec = spec;
  b.n = n;
  b.col_basis = enumerate_basis(spec, n);
  b.row_basis = enumerate_basis(spec, n - 1);

  std::map<Tuple, int> row_index;
  for (int r = 0; r < static_cast<int>(b.row_basis.size()); ++r)
    row_index.emplace(b.row_basis[r], r);

  for (int c = 0; c < static_cast<int>(b.col_basis.size()); ++c) {
    ChainVector img = boundary_of(spec, b.col_basis[c], eng);
    for (const auto& [w, q] : img) {
      auto it = row_index.find(w);
      if (it == row_index.end())
        throw std::logic_error("boundary_matrix: image word missing from basis");
      b.entries.push_back({it->second, c, q});
    }
  }
  return b;
}

BoundaryMatrix boundary_matrix(const ComplexSpec& spec, int n) {
  FaceEngine eng;
  return boundary_matrix(spec, n, eng);
}

bool verify_boundary_squared(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  if (lower.n + 1 != upper.n) throw std::invalid_argument("verify_boundary_squared: degrees must be consecutive");
  if (lower.col_basis != upper.row_basis)
    throw std::invalid_argument("verify_boundary_squared: bases do not line up");
  // Column c of the product is lower applied to column c of upper.  Group
  // upper's entries by column (they are already sorted that way) and push
  // each through lower's columns, accumulating by output row.
  size_t i = 0;
  std::vector<std::pair<size_t, size_t>> lower_col_range(
      static_cast<size_t>(lower.cols()), {0, 0});
  {
    size_t j = 0;
    for (int c = 0; c < lower.cols(); ++c) {
      size_t begin = j;
      while (j < lower.entries.size() && lower.entries[j].col == c) ++j;
      lower_col_range[static_cast<size_t>(c)] = {begin, j};
    }
  }
  while (i < upper.entries.size()) {
    const int c = upper.entries[i].col;
    std::map<int, IntPoly> acc;
    for (; i < upper.entries.size() && upper.entries[i].col == c; ++i) {
      const auto& [begin, end] = lower_col_range[static_cast<size_t>(upper.entries[i].row)];
      for (size_t k = begin; k < end; ++k) {
        IntPoly& slot = acc[lower.entries[k].row];
        slot += lower.entries[k].v * upper.entries[i].v;
        if (slot.is_zero()) acc.erase(lower.entries[k].row);
      }
    }
    if (!acc.empty()) return false;
  }
  return true;
}

}  // namespace ybh
