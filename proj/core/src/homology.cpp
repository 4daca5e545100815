#include "ybh/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ybh {

namespace {

// The three invariants that show up in practice, in canonical form.
// Their integer images at y = 2 are 3, 15 and 315.
const IntPoly& pattern_b() {  // 1 - y^2
  static const IntPoly p = normalize_invariant(poly_one_minus_t());
  return p;
}
const IntPoly& pattern_c() {  // 1 - y^4 = (1-y^2)(1+y^2)
  static const IntPoly p =
      normalize_invariant(IntPoly::from_coeffs({Int(1), Int(0), Int(-1)}));
  return p;
}
const IntPoly& pattern_d() {  // (1-y^2)(1+y^2)(1+y^2+y^4)
  static const IntPoly p = normalize_invariant(
      IntPoly::from_coeffs({Int(1), Int(1), Int(0), Int(-1), Int(-1)}));
  return p;
}

// Count torsion summands matching the three patterns.  Returns false when
// some summand matches none of them (or, at an integer specialization, when
// the pattern values collide and the buckets are ambiguous).
bool classify(const HomologyModule& h, long counts[3]) {
  counts[0] = counts[1] = counts[2] = 0;
  if (h.domain.symbolic) {
    for (const IntPoly& inv : h.torsion_poly) {
      const IntPoly p = normalize_invariant(inv);
      if (p == pattern_b()) {
        ++counts[0];
      } else if (p == pattern_c()) {
        ++counts[1];
      } else if (p == pattern_d()) {
        ++counts[2];
      } else {
        return false;
      }
    }
    return true;
  }
  Int targets[3];
  targets[0] = abs(pattern_b().eval(h.domain.t));
  targets[1] = abs(pattern_c().eval(h.domain.t));
  targets[2] = abs(pattern_d().eval(h.domain.t));
  if (targets[0] <= 1 || targets[0] == targets[1] ||
      targets[1] == targets[2] || targets[0] == targets[2]) {
    return false;
  }
  for (const Int& inv : h.torsion_int) {
    if (inv == targets[0]) {
      ++counts[0];
    } else if (inv == targets[1]) {
      ++counts[1];
    } else if (inv == targets[2]) {
      ++counts[2];
    } else {
      return false;
    }
  }
  return true;
}

HomologyModule from_counts(long free, long b, long c, long d,
                           const char* provenance) {
  HomologyModule h;
  h.free_rank = free;
  h.provenance = provenance;
  h.certified = true;
  for (long i = 0; i < b; ++i) h.torsion_poly.push_back(pattern_b());
  for (long i = 0; i < c; ++i) h.torsion_poly.push_back(pattern_c());
  for (long i = 0; i < d; ++i) h.torsion_poly.push_back(pattern_d());
  h.canonicalize();
  return h;
}

}  // namespace

std::string Domain::tag() const {
  if (symbolic) return "zt";
  std::string s = t.str();
  if (!s.empty() && s[0] == '-') s[0] = 'm';
  return "t" + s;
}

bool HomologyModule::is_zero() const {
  return free_rank == 0 && torsion_poly.empty() && torsion_int.empty();
}

void HomologyModule::canonicalize() {
  std::sort(torsion_poly.begin(), torsion_poly.end(), IntPoly::before);
  std::sort(torsion_int.begin(), torsion_int.end());
}

bool HomologyModule::triple(long& b, long& c) const {
  long counts[3];
  if (!classify(*this, counts) || counts[2] != 0) return false;
  b = counts[0];
  c = counts[1];
  return true;
}

bool HomologyModule::quadruple(long& b, long& c, long& d) const {
  long counts[3];
  if (!classify(*this, counts)) return false;
  b = counts[0];
  c = counts[1];
  d = counts[2];
  return true;
}

std::string HomologyModule::str() const {
  long counts[3];
  if (classify(*this, counts)) {
    std::ostringstream os;
    os << "(" << free_rank << "," << counts[0] << "," << counts[1];
    if (counts[2] != 0) os << "," << counts[2];
    os << ")";
    return os.str();
  }
  std::ostringstream os;
  os << "free " << free_rank << "; torsion [";
  bool first = true;
  if (domain.symbolic) {
    for (const IntPoly& inv : torsion_poly) {
      if (!first) os << ", ";
      os << inv.str();
      first = false;
    }
  } else {
    for (const Int& inv : torsion_int) {
      if (!first) os << ", ";
      os << inv.str();
      first = false;
    }
  }
  os << "]";
  return os.str();
}

namespace {

// Integer cross-check of a symbolic result: recompute everything over Z at
// t = y^2 and compare against the evaluated symbolic invariants.  Appends
// one note per probe and returns whether they agreed.
bool corroborate_at(HomologyModule& h, const BoundaryMatrix& down,
                    const BoundaryMatrix& up, long dim, long y, bool verify) {
  const Int tv = Int(y) * y;
  std::ostringstream note;
  note << "integer cross-check at t=" << tv.str() << ": ";

  SmithOptions so;
  so.transforms = true;
  so.verify = verify;
  const SmithIntResult si = snf_integer(up.dense_at(tv), so);
  const long free_z = dim - rank_over_Z(down.dense_at(tv)) - si.rank;

  std::map<Int, long> expect;
  bool vanished = false;
  for (const IntPoly& inv : h.torsion_poly) {
    const Int v = abs(inv.eval(tv));
    if (v.is_zero()) {
      vanished = true;
    } else if (v != 1) {
      ++expect[v];
    }
  }
  std::map<Int, long> got;
  for (const Int& v : si.torsion()) ++got[v];

  bool ok = !vanished && got == expect && free_z == h.free_rank;
  if (ok) {
    note << "free rank and elementary divisors agree";
  } else {
    note << "MISMATCH:";
    if (vanished) note << " a symbolic invariant vanishes here;";
    if (free_z != h.free_rank) {
      note << " free rank " << free_z << " vs symbolic " << h.free_rank << ";";
    }
    if (got != expect) {
      note << " divisors";
      for (const auto& [v, k] : got) note << " " << v.str() << "x" << k;
      note << " vs expected";
      for (const auto& [v, k] : expect) note << " " << v.str() << "x" << k;
    }
  }
  h.notes.push_back(note.str());
  return ok;
}

}  // namespace

HomologyModule homology_direct(const ComplexSpec& spec, int n,
                               const Domain& dom,
                               const HomologyOptions& opt) {
  if (n < 1) throw std::invalid_argument("homology_direct: n must be >= 1");

  FaceEngine eng;
  const BoundaryMatrix down = boundary_matrix(spec, n, eng);
  const BoundaryMatrix up = boundary_matrix(spec, n + 1, eng);
  const long dim = down.cols();

  HomologyModule h;
  h.domain = dom;
  h.provenance = "direct";

  SmithOptions so;
  so.transforms = true;
  so.verify = opt.verify;
  so.progress = opt.progress;

  long rank_down = 0;
  long rank_up = 0;
  if (dom.symbolic) {
    rank_down = rank_over_Qt(down.dense());
    const PolyMat up_dense = up.dense();
    SmithPolyResult s = snf_poly(up_dense, so);
    rank_up = s.rank;
    h.torsion_poly = s.torsion();
    if (opt.certify) {
      h.certified = certify_over_Zt(s, up_dense);
    }
    if (!h.certified) {
      h.notes.push_back(
          "invariants computed over Q[t]; transforms not certified over Z[t]");
      if (opt.corroborate) {
        h.free_rank = dim - rank_down - rank_up;
        const bool ok4 = corroborate_at(h, down, up, dim, 2, opt.verify);
        const bool ok9 = corroborate_at(h, down, up, dim, 3, opt.verify);
        if (ok4 && ok9) {
          h.notes.push_back(
              "independent integer computations at t=4 and t=9 corroborate "
              "the uncertified invariants");
        }
      }
    }
  } else {
    rank_down = rank_over_Z(down.dense_at(dom.t));
    const SmithIntResult s = snf_integer(up.dense_at(dom.t), so);
    rank_up = s.rank;
    h.torsion_int = s.torsion();
    h.certified = true;
  }

  h.free_rank = dim - rank_down - rank_up;
  if (h.free_rank < 0) {
    throw std::logic_error("homology_direct: negative free rank for " +
                           spec.str() + " at n=" + std::to_string(n));
  }
  h.canonicalize();
  return h;
}

long free_rank_only(const ComplexSpec& spec, int n, const Domain& dom) {
  if (n < 1) throw std::invalid_argument("free_rank_only: n must be >= 1");
  FaceEngine eng;
  const BoundaryMatrix down = boundary_matrix(spec, n, eng);
  const BoundaryMatrix up = boundary_matrix(spec, n + 1, eng);
  const long dim = down.cols();
  long free = 0;
  if (dom.symbolic) {
    free = dim - rank_over_Qt(down.dense()) - rank_over_Qt(up.dense());
  } else {
    free = dim - rank_over_Z(down.dense_at(dom.t)) -
           rank_over_Z(up.dense_at(dom.t));
  }
  if (free < 0) {
    throw std::logic_error("free_rank_only: negative free rank for " +
                           spec.str() + " at n=" + std::to_string(n));
  }
  return free;
}

HomologyModule assemble_decomposition(
    int m, int n, const std::map<int, HomologyModule>& initial) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("assemble_decomposition: need m, n >= 1");
  }
  const int jmax = std::min(m, n + 1);

  HomologyModule out;
  out.provenance = "assembled";
  out.certified = true;
  bool first = true;
  for (int j = 1; j <= jmax; ++j) {
    const auto it = initial.find(j);
    if (it == initial.end()) {
      throw std::invalid_argument(
          "assemble_decomposition: missing initial condition for j=" +
          std::to_string(j));
    }
    const HomologyModule& part = it->second;
    if (first) {
      out.domain = part.domain;
      first = false;
    } else if (part.domain != out.domain) {
      throw std::invalid_argument(
          "assemble_decomposition: initial conditions use mixed domains");
    }
    const Int w = binomial(m - 1, j - 1);
    const long wl = w.convert_to<long>();
    out.free_rank += wl * part.free_rank;
    for (const IntPoly& inv : part.torsion_poly) {
      for (long k = 0; k < wl; ++k) out.torsion_poly.push_back(inv);
    }
    for (const Int& inv : part.torsion_int) {
      for (long k = 0; k < wl; ++k) out.torsion_int.push_back(inv);
    }
    out.certified = out.certified && part.certified;
  }
  out.canonicalize();
  return out;
}

HomologyModule closed_form_h3(int m) {
  if (m < 1) throw std::invalid_argument("closed_form_h3: need m >= 1");
  const long long mm = m;
  const long long free_num = mm * (8 - 3 * mm + mm * mm);
  const long long b_num = (mm * mm - 1) * (5 * mm - 6);
  if (free_num % 6 != 0 || b_num % 6 != 0) {
    throw std::logic_error("closed_form_h3: non-integral count");
  }
  return from_counts(free_num / 6, b_num / 6, mm * (mm - 1), 0, "closed-form");
}

HomologyModule closed_form_h4(int m) {
  if (m < 1) throw std::invalid_argument("closed_form_h4: need m >= 1");
  auto bin = [m](int k) { return binomial(m - 1, k).convert_to<long>(); };
  const long free = bin(0) + bin(1) + bin(2) + bin(3) + bin(4);
  const long b = 6 * bin(1) + 33 * bin(2) + 51 * bin(3) + 23 * bin(4);
  const long c = 4 * bin(1) + 6 * bin(2) + 3 * bin(3);
  return from_counts(free, b, c, 0, "closed-form");
}

CompareResult compare(const HomologyModule& a, const HomologyModule& b) {
  CompareResult r;
  std::ostringstream diff;
  if (a.domain != b.domain) {
    r.equal = false;
    diff << "domain " << a.domain.tag() << " vs " << b.domain.tag();
    r.diff = diff.str();
    return r;
  }
  bool first = true;
  auto add = [&](const std::string& line) {
    if (!first) diff << "; ";
    diff << line;
    first = false;
    r.equal = false;
  };
  if (a.free_rank != b.free_rank) {
    add("free rank " + std::to_string(a.free_rank) + " vs " +
        std::to_string(b.free_rank));
  }
  if (a.domain.symbolic) {
    std::map<IntPoly, long, bool (*)(const IntPoly&, const IntPoly&)> counts(
        IntPoly::before);
    for (const IntPoly& inv : a.torsion_poly) ++counts[inv];
    for (const IntPoly& inv : b.torsion_poly) --counts[inv];
    for (const auto& [inv, k] : counts) {
      if (k != 0) {
        add("torsion " + inv.str() + ": " +
            (k > 0 ? "+" + std::to_string(k) + " in first"
                   : "+" + std::to_string(-k) + " in second"));
      }
    }
  } else {
    std::map<Int, long> counts;
    for (const Int& inv : a.torsion_int) ++counts[inv];
    for (const Int& inv : b.torsion_int) --counts[inv];
    for (const auto& [inv, k] : counts) {
      if (k != 0) {
        add("torsion " + inv.str() + ": " +
            (k > 0 ? "+" + std::to_string(k) + " in first"
                   : "+" + std::to_string(-k) + " in second"));
      }
    }
  }
  r.diff = diff.str();
  return r;
}

}  // namespace ybh
