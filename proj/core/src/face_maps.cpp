#include "ybh/face_maps.hpp"

#include <stdexcept>

namespace ybh {

std::vector<Tuple> enumerate_basis(const ComplexSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_basis: negative degree");
  if (n > 24) throw std::invalid_argument("enumerate_basis: degree out of range");
  const int ab = spec.alphabet();
  std::vector<Tuple> out;
  Tuple x(static_cast<size_t>(n), Letter(1));
  if (n == 0) {
    if (spec.admits(x)) out.push_back(x);
    return out;
  }
  // Odometer over 1..ab in lexicographic order.
  while (true) {
    if (spec.admits(x)) out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<size_t>(i)] == ab) {
      x[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<size_t>(i)];
  }
  return out;
}

const ChainVector& FaceEngine::wleft(const Tuple& prefix) {
  auto it = left_.find(prefix);
  if (it != left_.end()) return it->second;
  ChainVector out;
  const size_t j = prefix.size();
  if (j == 1) {
    out.emplace(Tuple{}, poly_one());
  } else {
    const RImage img = apply_R(prefix[j - 2], prefix[j - 1]);
    Tuple sub(prefix.begin(), prefix.end() - 1);
    for (int k = 0; k < img.count; ++k) {
      sub[j - 2] = img.term[k].c;
      const ChainVector& rec = wleft(sub);
      for (const auto& [w, q] : rec) {
        Tuple y = w;
        y.push_back(img.term[k].d);
        add_term(out, y, q * *img.term[k].w);
      }
    }
  }
  return left_.emplace(prefix, std::move(out)).first->second;
}

const ChainVector& FaceEngine::wright(const Tuple& suffix) {
  auto it = right_.find(suffix);
  if (it != right_.end()) return it->second;
  ChainVector out;
  const size_t j = suffix.size();
  if (j == 1) {
    out.emplace(Tuple{}, poly_one());
  } else {
    const RImage img = apply_R(suffix[0], suffix[1]);
    Tuple sub(suffix.begin() + 1, suffix.end());
    for (int k = 0; k < img.count; ++k) {
      sub[0] = img.term[k].d;
      const ChainVector& rec = wright(sub);
      for (const auto& [w, q] : rec) {
        Tuple y;
        y.reserve(w.size() + 1);
        y.push_back(img.term[k].c);
        y.insert(y.end(), w.begin(), w.end());
        add_term(out, y, q * *img.term[k].w);
      }
    }
  }
  return right_.emplace(suffix, std::move(out)).first->second;
}

ChainVector FaceEngine::face_left(int i, const Tuple& x) {
  const int n = static_cast<int>(x.size());
  if (i < 1 || i > n) throw std::invalid_argument("face_left: index out of range");
  Tuple prefix(x.begin(), x.begin() + i);
  const ChainVector& core = wleft(prefix);
  ChainVector out;
  for (const auto& [w, q] : core) {
    Tuple y = w;
    y.insert(y.end(), x.begin() + i, x.end());
    add_term(out, y, q);
  }
  return out;
}

ChainVector FaceEngine::face_right(int i, const Tuple& x) {
  const int n = static_cast<int>(x.size());
  if (i < 1 || i > n) throw std::invalid_argument("face_right: index out of range");
  Tuple suffix(x.begin() + (i - 1), x.end());
  const ChainVector& core = wright(suffix);
  ChainVector out;
  for (const auto& [w, q] : core) {
    Tuple y(x.begin(), x.begin() + (i - 1));
    y.insert(y.end(), w.begin(), w.end());
    add_term(out, y, q);
  }
  return out;
}

void FaceEngine::clear() {
  left_.clear();
  right_.clear();
}

ChainVector face_left(int i, const Tuple& x) {
  FaceEngine eng;
  return eng.face_left(i, x);
}

ChainVector face_right(int i, const Tuple& x) {
  FaceEngine eng;
  return eng.face_right(i, x);
}

ChainVector boundary_of(const ComplexSpec& spec, const Tuple& x, FaceEngine& eng) {
  const int n = static_cast<int>(x.size());
  ChainVector acc;
  for (int i = 1; i <= n; ++i) {
    const IntPoly sign(i % 2 == 0 ? 1 : -1);
    add_scaled(acc, eng.face_left(i, x), sign);
    add_scaled(acc, eng.face_right(i, x), -sign);
  }
  return project_chain(spec, acc);
}

ChainVector project_chain(const ComplexSpec& spec, const ChainVector& v) {
  if (spec.kind == ComplexSpec::Kind::full) return v;
  ChainVector out;
  for (const auto& [w, q] : v)
    if (spec.keeps(w)) out.emplace(w, q);
  return out;
}

namespace {

ChainVector face(FaceEngine& eng, const ComplexSpec& spec, bool left, int i,
                 const ChainVector& v) {
  ChainVector out;
  for (const auto& [x, q] : v) {
    ChainVector img = left ? eng.face_left(i, x) : eng.face_right(i, x);
    add_scaled(out, img, q);
  }
  return project_chain(spec, out);
}

}  // namespace

bool verify_precubic(const ComplexSpec& spec, int n) {
  if (n < 2) return true;
  FaceEngine eng;
  const auto basis = enumerate_basis(spec, n);
  for (const Tuple& x : basis) {
    ChainVector unit{{x, poly_one()}};
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        for (bool eps_left : {true, false})
          for (bool delta_left : {true, false}) {
            // d_i^eps d_j^delta vs d_{j-1}^delta d_i^eps (apply right-to-left).
            ChainVector lhs = face(eng, spec, eps_left, i,
                                   face(eng, spec, delta_left, j, unit));
            ChainVector rhs = face(eng, spec, delta_left, j - 1,
                                   face(eng, spec, eps_left, i, unit));
            if (lhs != rhs) return false;
          }
  }
  return true;
}

}  // namespace ybh
