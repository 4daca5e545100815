#include "ybh/chain_maps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ybh {

Tuple tau(const Tuple& x, int m) {
  Tuple y(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const Letter a = x[x.size() - 1 - i];
    if (a < 1 || a > m) throw std::invalid_argument("tau: letter outside 1..m");
    y[i] = static_cast<Letter>(m + 1 - a);
  }
  return y;
}

ChainVector tau_chain(const ChainVector& v, int m) {
  ChainVector out;
  for (const auto& [x, q] : v) add_term(out, tau(x, m), q);
  return out;
}

bool verify_tau_duality(int m, int n) {
  const ComplexSpec spec = ComplexSpec::full(m);
  FaceEngine eng;
  const auto basis = enumerate_basis(spec, n);
  for (const Tuple& x : basis) {
    const Tuple tx = tau(x, m);
    for (int i = 1; i <= n; ++i)
      if (tau_chain(eng.face_left(i, x), m) != eng.face_right(n + 1 - i, tx))
        return false;
    ChainVector lhs = tau_chain(boundary_of(spec, x, eng), m);
    ChainVector rhs = boundary_of(spec, tx, eng);
    if (n % 2 == 1) {
      ChainVector negated;
      for (const auto& [w, q] : rhs) negated.emplace(w, -q);
      rhs = std::move(negated);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

LetterMap LetterMap::identity(int m) {
  LetterMap f;
  f.m_from = f.m_to = m;
  for (int i = 1; i <= m; ++i) f.image.push_back(static_cast<Letter>(i));
  return f;
}

LetterMap LetterMap::shift(int m) {
  LetterMap f;
  f.m_from = m;
  f.m_to = m + 1;
  for (int i = 1; i <= m; ++i) f.image.push_back(static_cast<Letter>(i + 1));
  return f;
}

LetterMap LetterMap::from(int m_from, int m_to, const std::vector<int>& img) {
  if (static_cast<int>(img.size()) != m_from)
    throw std::invalid_argument("LetterMap: image must list all of 1..m_from");
  LetterMap f;
  f.m_from = m_from;
  f.m_to = m_to;
  for (int v : img) {
    if (v < 1 || v > m_to) throw std::invalid_argument("LetterMap: image letter out of range");
    f.image.push_back(static_cast<Letter>(v));
  }
  return f;
}

Tuple LetterMap::apply(const Tuple& x) const {
  Tuple y(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || x[i] > m_from)
      throw std::invalid_argument("LetterMap: word letter out of range");
    y[i] = (*this)(x[i]);
  }
  return y;
}

bool LetterMap::weakly_order_preserving() const {
  for (size_t i = 1; i < image.size(); ++i)
    if (image[i] < image[i - 1]) return false;
  return true;
}

bool LetterMap::strictly_order_preserving() const {
  for (size_t i = 1; i < image.size(); ++i)
    if (image[i] <= image[i - 1]) return false;
  return true;
}

LetterMap compose(const LetterMap& g, const LetterMap& f) {
  if (f.m_to != g.m_from) throw std::invalid_argument("compose: alphabets do not match");
  LetterMap h;
  h.m_from = f.m_from;
  h.m_to = g.m_to;
  for (Letter a : f.image) h.image.push_back(g(a));
  return h;
}

ChainVector map_chain(const LetterMap& f, const ChainVector& v) {
  ChainVector out;
  for (const auto& [x, q] : v) add_term(out, f.apply(x), q);
  return out;
}

PolyMat ChainMapMatrix::dense() const {
  PolyMat a(rows(), cols());
  for (const auto& e : entries) a.at(e.row, e.col) = e.v;
  return a;
}

ChainMapMatrix induced_chain_map(const LetterMap& f, const ComplexSpec& from,
                                 const ComplexSpec& to, int n) {
  if (!f.weakly_order_preserving())
    throw std::invalid_argument("induced_chain_map: map is not weakly order-preserving");
  if (f.m_from < from.alphabet() || f.m_to < to.alphabet())
    throw std::invalid_argument("induced_chain_map: alphabets do not cover the complexes");
  if (!descends(f, from, to, n))
    throw std::invalid_argument("induced_chain_map: map does not descend to the quotients");

  ChainMapMatrix m;
  m.from = from;
  m.to = to;
  m.n = n;
  m.col_basis = enumerate_basis(from, n);
  m.row_basis = enumerate_basis(to, n);
  std::map<Tuple, int> row_index;
  for (int r = 0; r < m.rows(); ++r) row_index.emplace(m.row_basis[r], r);
  for (int c = 0; c < m.cols(); ++c) {
    Tuple y = f.apply(m.col_basis[c]);
    if (!to.keeps(y)) continue;
    auto it = row_index.find(y);
    if (it == row_index.end())
      throw std::logic_error("induced_chain_map: surviving image not in target basis");
    m.entries.push_back({it->second, c, poly_one()});
  }
  return m;
}

ChainMapMatrix induced_chain_map(const LetterMap& f, int n) {
  return induced_chain_map(f, ComplexSpec::full(f.m_from), ComplexSpec::full(f.m_to), n);
}

bool descends(const LetterMap& f, const ComplexSpec& from, const ComplexSpec& to, int n) {
  // Enumerate all words over the source alphabet (not just basis words) and
  // check killed -> killed.
  const auto all = enumerate_basis(ComplexSpec::full(from.alphabet()), n);
  for (const Tuple& x : all)
    if (!from.keeps(x) && to.keeps(f.apply(x))) return false;
  return true;
}

bool verify_chain_map(const LetterMap& f, const ComplexSpec& from,
                      const ComplexSpec& to, int n) {
  FaceEngine eng;
  for (const Tuple& x : enumerate_basis(from, n)) {
    ChainVector lhs = project_chain(to, map_chain(f, boundary_of(from, x, eng)));
    Tuple y = f.apply(x);
    ChainVector rhs;
    if (to.keeps(y)) rhs = boundary_of(to, y, eng);
    if (lhs != rhs) return false;
  }
  return true;
}

bool verify_facemap_naturality(const LetterMap& f, int n) {
  FaceEngine eng;
  for (const Tuple& x : enumerate_basis(ComplexSpec::full(f.m_from), n)) {
    const Tuple y = f.apply(x);
    for (int i = 1; i <= n; ++i) {
      if (map_chain(f, eng.face_left(i, x)) != eng.face_left(i, y)) return false;
      if (map_chain(f, eng.face_right(i, x)) != eng.face_right(i, y)) return false;
    }
  }
  return true;
}

SplittingPair splitting_pair(int m, int u) {
  if (u < 0 || u >= m - 1)
    throw std::invalid_argument("splitting_pair: requires 0 <= u < m-1");
  SplittingPair s;
  s.from = ComplexSpec::use_top(m - 1, u, m - 1 - u);
  s.to = ComplexSpec::use_top(m, u, m - u);
  std::vector<int> fa, ga;
  for (int i = 1; i <= m - 1; ++i) fa.push_back(i < m - u ? i : i + 1);
  for (int i = 1; i <= m; ++i) ga.push_back(i < m - u ? i : i - 1);
  s.alpha = LetterMap::from(m - 1, m, fa);
  s.alpha_bar = LetterMap::from(m, m - 1, ga);
  return s;
}

bool verify_split(int m, int u, int n) {
  const SplittingPair s = splitting_pair(m, u);
  // alpha_bar alpha = id already on letters; check it, then the quotient
  // conditions at this degree and the one below (where boundaries land).
  const LetterMap round_trip = compose(s.alpha_bar, s.alpha);
  for (int i = 1; i <= s.from.alphabet(); ++i)
    if (round_trip(static_cast<Letter>(i)) != i) return false;
  for (int k = std::max(0, n - 1); k <= n; ++k) {
    if (!descends(s.alpha, s.from, s.to, k)) return false;
    if (!descends(s.alpha_bar, s.to, s.from, k)) return false;
  }
  if (!verify_chain_map(s.alpha, s.from, s.to, n)) return false;
  if (!verify_chain_map(s.alpha_bar, s.to, s.from, n)) return false;
  // Identity on the quotient basis, through both projections.
  for (const Tuple& x : enumerate_basis(s.from, n)) {
    ChainVector mid = project_chain(s.to, ChainVector{{s.alpha.apply(x), poly_one()}});
    ChainVector back = project_chain(s.from, map_chain(s.alpha_bar, mid));
    if (back != ChainVector{{x, poly_one()}}) return false;
  }
  return true;
}

}  // namespace ybh
