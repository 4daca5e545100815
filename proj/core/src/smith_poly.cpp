#include "ybh/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybh {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

Int max_abs_coeff(const IntPoly& p) {
  Int m = 0;
  for (const Int& x : p.coeffs())
    if (abs(x) > m) m = abs(x);
  return m;
}

// Strictly better pivot: smaller degree, ties by smaller largest coefficient.
bool better_pivot(const IntPoly& cand, const IntPoly& best) {
  if (cand.degree() != best.degree()) return cand.degree() < best.degree();
  return max_abs_coeff(cand) < max_abs_coeff(best);
}

IntPoly div_coeffs(const IntPoly& p, const Int& g) {
  if (g == 1) return p;
  std::vector<Int> cs = p.coeffs();
  for (Int& x : cs) x /= g;
  return IntPoly::from_coeffs(std::move(cs));
}

// Elimination step data: to clear entry e against pivot p (in Q[t]),
// write s*e = q*p + rem with q, rem in Z[t] and s the smallest positive
// integer clearing q's denominators.
struct ElimStep {
  Int s;
  IntPoly q;
};

ElimStep plan_elimination(const IntPoly& entry, const IntPoly& pivot) {
  RatPoly q, rem;
  RatPoly::divmod(RatPoly(entry), RatPoly(pivot), q, rem);
  Int s = 1;
  for (const Rat& x : q.coeffs()) s = lcm(s, denominator(x));
  std::vector<Int> qi;
  qi.reserve(static_cast<size_t>(q.degree()) + 1);
  for (const Rat& x : q.coeffs()) {
    Rat scaled = x * Rat(s);
    qi.push_back(numerator(scaled));
  }
  return {s, IntPoly::from_coeffs(std::move(qi))};
}

}  // namespace

std::vector<IntPoly> SmithPolyResult::torsion() const {
  std::vector<IntPoly> t;
  for (const IntPoly& d : diag)
    if (!d.is_zero() && !d.is_one()) t.push_back(d);
  return t;
}

SmithPolyResult snf_poly(const PolyMat& a0, const SmithOptions& opt) {
  const int r = a0.rows(), c = a0.cols();
  const int nmin = std::min(r, c);

  SmithPolyResult res;
  res.with_transforms = opt.transforms;
  res.diag.assign(static_cast<size_t>(nmin), IntPoly());

  PolyMat a = a0;
  if (opt.transforms) {
    res.p = RatMat::identity(r);
    res.q = RatMat::identity(c);
  }

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    a.swap_rows(i, j);
    if (opt.transforms) res.p.swap_rows(i, j);
    res.det_p = -res.det_p;
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    a.swap_cols(i, j);
    if (opt.transforms) res.q.swap_cols(i, j);
    res.det_q = -res.det_q;
  };

  // row_i <- s*row_i - q*row_k, then strip the row's integer content.
  auto row_op = [&](int i, int k, const ElimStep& e) {
    for (int j = 0; j < c; ++j) {
      IntPoly v = a.at(i, j) * e.s;
      v -= e.q * a.at(k, j);
      a.at(i, j) = std::move(v);
    }
    Int g = 0;
    for (int j = 0; j < c && g != 1; ++j) g = gcd(g, a.at(i, j).content());
    if (g > 1)
      for (int j = 0; j < c; ++j) a.at(i, j) = div_coeffs(a.at(i, j), g);
    if (opt.transforms) {
      const RatPoly qr(e.q);
      const Rat scale = g > 1 ? Rat(e.s, g) : Rat(e.s);
      const Rat qdiv = g > 1 ? Rat(Int(1), g) : Rat(1);
      for (int j = 0; j < r; ++j) {
        RatPoly v = res.p.at(i, j) * scale;
        v -= qr * res.p.at(k, j) * qdiv;
        res.p.at(i, j) = std::move(v);
      }
    }
    res.det_p *= g > 1 ? Rat(e.s, g) : Rat(e.s);
  };
  auto col_op = [&](int j, int k, const ElimStep& e) {
    for (int i = 0; i < r; ++i) {
      IntPoly v = a.at(i, j) * e.s;
      v -= e.q * a.at(i, k);
      a.at(i, j) = std::move(v);
    }
    Int g = 0;
    for (int i = 0; i < r && g != 1; ++i) g = gcd(g, a.at(i, j).content());
    if (g > 1)
      for (int i = 0; i < r; ++i) a.at(i, j) = div_coeffs(a.at(i, j), g);
    if (opt.transforms) {
      const RatPoly qr(e.q);
      const Rat scale = g > 1 ? Rat(e.s, g) : Rat(e.s);
      const Rat qdiv = g > 1 ? Rat(Int(1), g) : Rat(1);
      for (int i = 0; i < c; ++i) {
        RatPoly v = res.q.at(i, j) * scale;
        v -= qr * res.q.at(i, k) * qdiv;
        res.q.at(i, j) = std::move(v);
      }
    }
    res.det_q *= g > 1 ? Rat(e.s, g) : Rat(e.s);
  };
  // fold column j into column i (no scaling, no stripping)
  auto col_fold = [&](int i, int j) {
    for (int row = 0; row < r; ++row) a.at(row, i) += a.at(row, j);
    if (opt.transforms)
      for (int row = 0; row < c; ++row)
        res.q.at(row, i) += res.q.at(row, j);
  };

  auto reduce_pair = [&](int i, int j) {
    while (true) {
      if (!a.at(j, i).is_zero()) {
        if (a.at(j, i).degree() < a.at(i, i).degree()) {
          swap_rows(j, i);
          continue;
        }
        ElimStep e = plan_elimination(a.at(j, i), a.at(i, i));
        row_op(j, i, e);
        if (!a.at(j, i).is_zero()) swap_rows(j, i);
        continue;
      }
      if (!a.at(i, j).is_zero()) {
        if (a.at(i, j).degree() < a.at(i, i).degree()) {
          swap_cols(j, i);
          continue;
        }
        ElimStep e = plan_elimination(a.at(i, j), a.at(i, i));
        col_op(j, i, e);
        if (!a.at(i, j).is_zero()) swap_cols(j, i);
        continue;
      }
      break;
    }
  };

  int k = 0;
  for (; k < nmin; ++k) {
    int pi = -1, pj = -1;
    bool ideal = false;
    for (int i = k; i < r && !ideal; ++i)
      for (int j = k; j < c; ++j) {
        const IntPoly& v = a.at(i, j);
        if (v.is_zero()) continue;
        if (pi < 0 || better_pivot(v, a.at(pi, pj))) {
          pi = i;
          pj = j;
          if (v.degree() == 0 && v.is_unit()) {
            ideal = true;
            break;
          }
        }
      }
    if (pi < 0) break;
    swap_rows(k, pi);
    swap_cols(k, pj);
    while (true) {
      bool swapped = false;
      for (int i = k + 1; i < r; ++i) {
        if (a.at(i, k).is_zero()) continue;
        if (a.at(i, k).degree() < a.at(k, k).degree()) {
          swap_rows(i, k);
          swapped = true;
          continue;
        }
        ElimStep e = plan_elimination(a.at(i, k), a.at(k, k));
        row_op(i, k, e);
        if (!a.at(i, k).is_zero()) {
          swap_rows(i, k);
          swapped = true;
        }
      }
      for (int j = k + 1; j < c; ++j) {
        if (a.at(k, j).is_zero()) continue;
        if (a.at(k, j).degree() < a.at(k, k).degree()) {
          swap_cols(j, k);
          swapped = true;
          continue;
        }
        ElimStep e = plan_elimination(a.at(k, j), a.at(k, k));
        col_op(j, k, e);
        if (!a.at(k, j).is_zero()) {
          swap_cols(j, k);
          swapped = true;
        }
      }
      if (swapped) continue;
      bool clean = true;
      for (int i = k + 1; i < r && clean; ++i) clean = a.at(i, k).is_zero();
      for (int j = k + 1; j < c && clean; ++j) clean = a.at(k, j).is_zero();
      if (clean) break;
    }
    if (opt.progress) opt.progress(k + 1, nmin);
  }
  res.rank = k;

  // Divisibility chain on primitive parts (equivalent to divisibility in
  // Q[t]); the fold-and-reduce fix strictly lowers deg(d_i), so this ends.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < res.rank; ++i)
      for (int j = i + 1; j < res.rank; ++j) {
        if (IntPoly::divides(a.at(i, i).primitive(), a.at(j, j).primitive())) continue;
        changed = true;
        col_fold(i, j);
        reduce_pair(i, j);
      }
  }

  // Normalize the diagonal to primitive, positive-lowest-coefficient form,
  // absorbing the discarded rational unit into P.
  for (int i = 0; i < nmin; ++i) {
    const IntPoly& d = a.at(i, i);
    if (d.is_zero()) continue;
    IntPoly norm = normalize_invariant(d);
    res.diag[static_cast<size_t>(i)] = norm;
    // d = f * norm with f = +-content(d)
    Int f = d.content();
    if (d.leading().sign() != norm.leading().sign()) f = -f;
    if (opt.transforms && f != 1) {
      // Two-argument construction rejects a negative denominator; divide.
      const Rat inv = Rat(1) / Rat(f);
      for (int j = 0; j < r; ++j) res.p.at(i, j) *= inv;
      res.det_p *= inv;
    }
  }

  if (opt.transforms && opt.verify) {
    RatMat a0r(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (!a0.at(i, j).is_zero()) a0r.at(i, j) = RatPoly(a0.at(i, j));
    RatMat prod = mat_mul(mat_mul(res.p, a0r), res.q);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        RatPoly want;
        if (i == j && i < nmin) want = RatPoly(res.diag[static_cast<size_t>(i)]);
        if (prod.at(i, j) != want)
          throw std::logic_error("snf_poly: residual P*A*Q != D");
      }
    res.verified = true;
  }
  return res;
}

namespace {

// Positive rational content of a list of polynomials: the largest rho > 0
// with entry = rho * (integer-primitive part) across the whole list; zero
// for an all-zero list.
Rat content_of_entries(const std::vector<const RatPoly*>& entries) {
  Int gn = 0, ld = 1;
  for (const RatPoly* p : entries)
    for (const Rat& x : p->coeffs()) {
      gn = gcd(gn, abs(numerator(x)));
      ld = lcm(ld, denominator(x));
    }
  if (gn == 0) return Rat(0);
  return Rat(gn, ld);
}

}  // namespace

bool certify_over_Zt(SmithPolyResult& dec, const PolyMat& a0) {
  if (!dec.with_transforms)
    throw std::invalid_argument("certify_over_Zt: decomposition lacks transforms");
  const int r = dec.p.rows(), c = dec.q.cols();
  const int rank = dec.rank;

  std::vector<Rat> cr(static_cast<size_t>(r)), ec(static_cast<size_t>(c));
  for (int i = 0; i < r; ++i) {
    std::vector<const RatPoly*> row;
    for (int j = 0; j < r; ++j) row.push_back(&dec.p.at(i, j));
    cr[static_cast<size_t>(i)] = content_of_entries(row);
    if (cr[static_cast<size_t>(i)].is_zero())
      throw std::logic_error("certify_over_Zt: zero row in P");
  }
  for (int j = 0; j < c; ++j) {
    std::vector<const RatPoly*> col;
    for (int i = 0; i < c; ++i) col.push_back(&dec.q.at(i, j));
    ec[static_cast<size_t>(j)] = content_of_entries(col);
    if (ec[static_cast<size_t>(j)].is_zero())
      throw std::logic_error("certify_over_Zt: zero column in Q");
  }

  // Paired scalings: row i of P gets u_i = k_i / cr_i and column i of Q gets
  // v_i = cr_i / k_i so the diagonal entry is untouched.  Integrality of the
  // rescaled column needs k_i | gamma_i with gamma_i = cr_i * ec_i, so every
  // gamma_i must be a (positive) integer or the attempt fails.
  std::vector<Int> gamma(static_cast<size_t>(rank)), kfac(static_cast<size_t>(rank), Int(1));
  for (int i = 0; i < rank; ++i) {
    Rat g = cr[static_cast<size_t>(i)] * ec[static_cast<size_t>(i)];
    if (denominator(g) != 1) return false;
    gamma[static_cast<size_t>(i)] = numerator(g);
  }

  // Determinant bookkeeping with the baseline choices k_i = 1, free rows
  // u_i = 1/cr_i, free columns v_j = 1/ec_j.
  Rat d1 = dec.det_p;
  for (int i = 0; i < r; ++i) d1 /= cr[static_cast<size_t>(i)];
  Rat d2 = dec.det_q;
  for (int i = 0; i < rank; ++i) d2 *= cr[static_cast<size_t>(i)];
  for (int j = rank; j < c; ++j) d2 /= ec[static_cast<size_t>(j)];

  // |det| can only be multiplied by integers (extra factors on free rows, or
  // k_i moved between a paired row and column), so the numerator must
  // already be 1.
  if (abs(numerator(d1)) != 1) return false;
  Int need = denominator(d1);
  Int f_row = 1;
  if (need != 1) {
    if (rank < r) {
      f_row = need;
    } else {
      for (int i = 0; i < rank && need != 1; ++i) {
        Int g = gcd(need, gamma[static_cast<size_t>(i)]);
        kfac[static_cast<size_t>(i)] = g;
        need /= g;
        d2 /= Rat(g);
      }
      if (need != 1) return false;
    }
  }
  if (abs(numerator(d2)) != 1) return false;
  Int g_col = denominator(d2);
  if (g_col != 1 && rank >= c) return false;

  PolyMat pz(r, r), qz(c, c);
  for (int i = 0; i < r; ++i) {
    Rat u = i < rank ? Rat(kfac[static_cast<size_t>(i)]) : (i == rank ? Rat(f_row) : Rat(1));
    u /= cr[static_cast<size_t>(i)];
    for (int j = 0; j < r; ++j) {
      if (dec.p.at(i, j).is_zero()) continue;
      pz.at(i, j) = (dec.p.at(i, j) * u).to_int_poly();
    }
  }
  for (int j = 0; j < c; ++j) {
    Rat v = j < rank ? cr[static_cast<size_t>(j)] / Rat(kfac[static_cast<size_t>(j)])
                     : (j == rank ? Rat(g_col) : Rat(1)) / ec[static_cast<size_t>(j)];
    for (int i = 0; i < c; ++i) {
      if (dec.q.at(i, j).is_zero()) continue;
      qz.at(i, j) = (dec.q.at(i, j) * v).to_int_poly();
    }
  }

  PolyMat d(r, c);
  const int nmin = std::min(r, c);
  for (int i = 0; i < nmin; ++i) d.at(i, i) = dec.diag[static_cast<size_t>(i)];
  if (!(mat_mul(mat_mul(pz, a0), qz) == d))
    throw std::logic_error("certify_over_Zt: integer residual P*A*Q != D");

  dec.pz = std::move(pz);
  dec.qz = std::move(qz);
  dec.certified = true;
  return true;
}

int rank_over_Qt(const PolyMat& a) {
  SmithOptions opt;
  opt.transforms = false;
  opt.verify = false;
  return snf_poly(a, opt).rank;
}

}  // namespace ybh
