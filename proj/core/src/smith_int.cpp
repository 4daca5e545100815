#include "ybh/smith.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ybh {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::msb;

// g = gcd(a, b) >= 0 with g = s*a + t*b; plain iterative extended Euclid.
// The Bezout pair it returns satisfies |s| <= |b|/g, |t| <= |a|/g, which is
// what bounds the growth of the combined rows below.
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  s = std::move(s0);
  t = std::move(t0);
  return r0;
}

// dst += k * src on sorted sparse vectors.
void axpy_sparse(SparseIntVec& dst, const SparseIntVec& src, const Int& k) {
  SparseIntVec out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i]));
      ++i;
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, k * src[j].second);
      ++j;
    } else {
      Int v = dst[i].second + k * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

// (s*x + t*y, u*x + v*y) on sorted sparse vectors, one merged pass.
std::pair<SparseIntVec, SparseIntVec> combine_sparse(const SparseIntVec& x,
                                                     const SparseIntVec& y,
                                                     const Int& s, const Int& t,
                                                     const Int& u, const Int& v) {
  SparseIntVec ox, oy;
  ox.reserve(x.size() + y.size());
  oy.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int idx;
    const Int* xe = nullptr;
    const Int* ye = nullptr;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      idx = x[i].first;
      xe = &x[i].second;
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      idx = y[j].first;
      ye = &y[j].second;
      ++j;
    } else {
      idx = x[i].first;
      xe = &x[i].second;
      ye = &y[j].second;
      ++i;
      ++j;
    }
    Int nx = (xe ? s * *xe : Int(0)) + (ye ? t * *ye : Int(0));
    Int ny = (xe ? u * *xe : Int(0)) + (ye ? v * *ye : Int(0));
    if (nx != 0) ox.emplace_back(idx, std::move(nx));
    if (ny != 0) oy.emplace_back(idx, std::move(ny));
  }
  return {std::move(ox), std::move(oy)};
}

unsigned bit_size(const Int& v) {
  if (v == 0) return 0;
  Int a = abs(v);
  return static_cast<unsigned>(msb(a)) + 1;
}

long resident_mb() {
  std::ifstream f("/proc/self/status");
  std::string key;
  long kb = 0;
  while (f >> key) {
    if (key == "VmRSS:") {
      f >> kb;
      break;
    }
    std::getline(f, key);
  }
  return kb / 1024;
}

// Elimination trace for the long integer reductions, enabled by setting
// YBH_SNF_STATS in the environment.  Big boundary matrices are where the
// transforms could blow up, so the trace reports nonzero counts and worst
// entry widths while the job is still running instead of after the OOM.
struct SnfTrace {
  bool on = std::getenv("YBH_SNF_STATS") != nullptr;
  int stride = 1;

  void report(const char* phase, int step, int total, const IntMat& a,
              const IntMat& p, const std::vector<SparseIntVec>& q_cols) const {
    if (!on) return;
    long nnz_a = 0;
    unsigned bits_a = 0;
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        if (a.at(i, j) != 0) {
          ++nnz_a;
          bits_a = std::max(bits_a, bit_size(a.at(i, j)));
        }
    long nnz_p = 0;
    unsigned bits_p = 0;
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j)
        if (p.at(i, j) != 0) {
          ++nnz_p;
          bits_p = std::max(bits_p, bit_size(p.at(i, j)));
        }
    long nnz_q = 0;
    unsigned bits_q = 0;
    for (const auto& col : q_cols)
      for (const auto& [i, v] : col) {
        ++nnz_q;
        bits_q = std::max(bits_q, bit_size(v));
      }
    std::fprintf(stderr,
                 "[snf] %s %d/%d  a: nnz %ld max %ub  p: nnz %ld max %ub  "
                 "q: nnz %ld max %ub  rss %ld MB\n",
                 phase, step, total, nnz_a, bits_a, nnz_p, bits_p, nnz_q,
                 bits_q, resident_mb());
  }
};

}  // namespace

IntMat SmithIntResult::q_dense() const {
  const int n = static_cast<int>(q_cols.size());
  IntMat q(n, n);
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : q_cols[j]) q.at(i, j) = v;
  return q;
}

std::vector<Int> SmithIntResult::torsion() const {
  std::vector<Int> t;
  for (const Int& d : diag)
    if (d > 1) t.push_back(d);
  return t;
}

SmithIntResult snf_integer(const IntMat& a0, const SmithOptions& opt) {
  const int r = a0.rows(), c = a0.cols();
  const int nmin = std::min(r, c);

  SmithIntResult res;
  res.with_transforms = opt.transforms;
  res.diag.assign(static_cast<size_t>(nmin), Int(0));

  IntMat a = a0;
  if (opt.transforms) {
    res.p = IntMat::identity(r);
    res.q_cols.assign(static_cast<size_t>(c), {});
    for (int j = 0; j < c; ++j) res.q_cols[static_cast<size_t>(j)].emplace_back(j, Int(1));
  }

  // Nonzero counts per row and column of the working matrix, kept current
  // through every mutation below.  Settled rows and columns are zero away
  // from the diagonal, so for the active block these double as the
  // submatrix counts the pivot search wants.
  std::vector<int> row_nnz(static_cast<size_t>(r), 0);
  std::vector<int> col_nnz(static_cast<size_t>(c), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (a.at(i, j) != 0) {
        ++row_nnz[static_cast<size_t>(i)];
        ++col_nnz[static_cast<size_t>(j)];
      }
  auto bump = [&](int i, int j, bool was, bool now) {
    if (was == now) return;
    const int d = now ? 1 : -1;
    row_nnz[static_cast<size_t>(i)] += d;
    col_nnz[static_cast<size_t>(j)] += d;
  };

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    a.swap_rows(i, j);
    std::swap(row_nnz[static_cast<size_t>(i)], row_nnz[static_cast<size_t>(j)]);
    if (opt.transforms) res.p.swap_rows(i, j);
    res.det_p = -res.det_p;
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    a.swap_cols(i, j);
    std::swap(col_nnz[static_cast<size_t>(i)], col_nnz[static_cast<size_t>(j)]);
    if (opt.transforms) std::swap(res.q_cols[static_cast<size_t>(i)], res.q_cols[static_cast<size_t>(j)]);
    res.det_q = -res.det_q;
  };
  // row_i -= q * row_k
  auto row_axpy = [&](int i, int k, const Int& q) {
    for (int j = 0; j < c; ++j) {
      if (a.at(k, j) == 0) continue;
      Int& e = a.at(i, j);
      const bool was = e != 0;
      e -= q * a.at(k, j);
      bump(i, j, was, e != 0);
    }
    if (opt.transforms)
      for (int j = 0; j < r; ++j)
        if (res.p.at(k, j) != 0) res.p.at(i, j) -= q * res.p.at(k, j);
  };
  // col_j -= q * col_k
  auto col_axpy = [&](int j, int k, const Int& q) {
    for (int i = 0; i < r; ++i) {
      if (a.at(i, k) == 0) continue;
      Int& e = a.at(i, j);
      const bool was = e != 0;
      e -= q * a.at(i, k);
      bump(i, j, was, e != 0);
    }
    if (opt.transforms)
      axpy_sparse(res.q_cols[static_cast<size_t>(j)], res.q_cols[static_cast<size_t>(k)], -q);
  };
  // (row_k, row_i) <- (s*row_k + t*row_i, u*row_k + v*row_i), s*v - t*u = 1.
  auto two_row_combine = [&](int k, int i, const Int& s, const Int& t,
                             const Int& u, const Int& v) {
    for (int j = 0; j < c; ++j) {
      Int& ek = a.at(k, j);
      Int& ei = a.at(i, j);
      if (ek == 0 && ei == 0) continue;
      const bool wask = ek != 0, wasi = ei != 0;
      Int nk = s * ek + t * ei;
      Int ni = u * ek + v * ei;
      ek = std::move(nk);
      ei = std::move(ni);
      bump(k, j, wask, ek != 0);
      bump(i, j, wasi, ei != 0);
    }
    if (opt.transforms)
      for (int j = 0; j < r; ++j) {
        Int& ek = res.p.at(k, j);
        Int& ei = res.p.at(i, j);
        if (ek == 0 && ei == 0) continue;
        Int nk = s * ek + t * ei;
        Int ni = u * ek + v * ei;
        ek = std::move(nk);
        ei = std::move(ni);
      }
  };
  // (col_k, col_j) <- (s*col_k + t*col_j, u*col_k + v*col_j), s*v - t*u = 1.
  auto two_col_combine = [&](int k, int j, const Int& s, const Int& t,
                             const Int& u, const Int& v) {
    for (int i = 0; i < r; ++i) {
      Int& ek = a.at(i, k);
      Int& ej = a.at(i, j);
      if (ek == 0 && ej == 0) continue;
      const bool wask = ek != 0, wasj = ej != 0;
      Int nk = s * ek + t * ej;
      Int nj = u * ek + v * ej;
      ek = std::move(nk);
      ej = std::move(nj);
      bump(i, k, wask, ek != 0);
      bump(i, j, wasj, ej != 0);
    }
    if (opt.transforms) {
      auto [nk, nj] = combine_sparse(res.q_cols[static_cast<size_t>(k)],
                                     res.q_cols[static_cast<size_t>(j)], s, t, u, v);
      res.q_cols[static_cast<size_t>(k)] = std::move(nk);
      res.q_cols[static_cast<size_t>(j)] = std::move(nj);
    }
  };
  auto negate_row = [&](int i) {
    for (int j = 0; j < c; ++j)
      if (a.at(i, j) != 0) a.at(i, j) = -a.at(i, j);
    if (opt.transforms)
      for (int j = 0; j < r; ++j)
        if (res.p.at(i, j) != 0) res.p.at(i, j) = -res.p.at(i, j);
    res.det_p = -res.det_p;
  };

  // Zero a(i,k) against the pivot a(k,k).  Exact quotients use a plain row
  // operation; otherwise one Bezout 2x2 combine lands the gcd on the pivot
  // and the zero below it in a single step.  (The textbook alternative,
  // swapping the remainder into the pivot and looping, re-runs full-row
  // updates once per Euclid step; on the dense tail of the big specialized
  // boundaries that cascade is exactly what used to blow the entries up.)
  auto clear_in_col = [&](int k, int i) {
    const Int& p = a.at(k, k);
    const Int& x = a.at(i, k);
    if (x == 0) return;
    if (x % p == 0) {
      row_axpy(i, k, x / p);
      return;
    }
    Int s, t;
    const Int g = ext_gcd(p, x, s, t);
    two_row_combine(k, i, s, t, -(x / g), p / g);
  };
  // Zero a(k,j) against the pivot a(k,k), column flavor.
  auto clear_in_row = [&](int k, int j) {
    const Int& p = a.at(k, k);
    const Int& x = a.at(k, j);
    if (x == 0) return;
    if (x % p == 0) {
      col_axpy(j, k, x / p);
      return;
    }
    Int s, t;
    const Int g = ext_gcd(p, x, s, t);
    two_col_combine(k, j, s, t, -(x / g), p / g);
  };

  // Reduce a 2x2 corner with pivot at (i,i) and the only other possibly
  // nonzero entries at (j,i), (i,j), (j,j); used by the divisibility sweep.
  auto reduce_pair = [&](int i, int j) {
    while (a.at(j, i) != 0 || a.at(i, j) != 0) {
      if (a.at(j, i) != 0) clear_in_col(i, j);
      if (a.at(i, j) != 0) clear_in_row(i, j);
    }
    if (a.at(i, i) < 0) negate_row(i);
    if (a.at(j, j) < 0) negate_row(j);
  };

  SnfTrace trace;
  trace.stride = std::max(1, nmin / 24);

  int k = 0;
  for (; k < nmin; ++k) {
    // Pivot choice: smallest |value| first (it reaches the gcd in the
    // fewest passes), ties broken by the Markowitz fill count
    // (row_nnz - 1) * (col_nnz - 1).  Small pivots keep the quotients
    // small and low fill keeps the update footprint small; together they
    // are what stop the transforms from blowing up on the larger boundary
    // matrices.  A unit pivot in a singleton row or column is unbeatable.
    int pi = -1, pj = -1;
    Int best;
    long fill_best = 0;
    bool settled = false;
    for (int i = k; i < r && !settled; ++i) {
      if (row_nnz[static_cast<size_t>(i)] == 0) continue;
      const long rw = row_nnz[static_cast<size_t>(i)] - 1;
      for (int j = k; j < c; ++j) {
        if (a.at(i, j) == 0) continue;
        Int v = abs(a.at(i, j));
        if (pi >= 0 && v > best) continue;
        const long fill = rw * (col_nnz[static_cast<size_t>(j)] - 1);
        if (pi < 0 || v < best || fill < fill_best) {
          pi = i;
          pj = j;
          best = std::move(v);
          fill_best = fill;
          if (best == 1 && fill_best == 0) {
            settled = true;
            break;
          }
        }
      }
    }
    if (pi < 0) break;
    swap_rows(k, pi);
    swap_cols(k, pj);
    while (true) {
      for (int i = k + 1; i < r; ++i) clear_in_col(k, i);
      for (int j = k + 1; j < c; ++j) clear_in_row(k, j);
      // A Bezout column step can refill the pivot column, so re-check both.
      bool clean = true;
      for (int i = k + 1; i < r && clean; ++i) clean = a.at(i, k) == 0;
      for (int j = k + 1; j < c && clean; ++j) clean = a.at(k, j) == 0;
      if (clean) break;
    }
    if (a.at(k, k) < 0) negate_row(k);
    if ((k + 1) % trace.stride == 0 || k + 1 == nmin)
      trace.report("pivot", k + 1, nmin, a, res.p, res.q_cols);
    if (opt.progress) opt.progress(k + 1, nmin);
  }
  res.rank = k;

  // Divisibility sweep: d_i | d_j for i < j.  Folding column j onto column
  // i puts gcd(d_i, d_j) at position i and lcm at position j; repeat until
  // the chain is stable (each fix strictly shrinks some d_i, so it ends).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < res.rank; ++i)
      for (int j = i + 1; j < res.rank; ++j) {
        if (a.at(j, j) % a.at(i, i) == 0) continue;
        changed = true;
        col_axpy(i, j, Int(-1));  // col_i += col_j
        reduce_pair(i, j);
      }
  }

  for (int i = 0; i < nmin; ++i) res.diag[static_cast<size_t>(i)] = a.at(i, i);
  trace.report("sweep", res.rank, nmin, a, res.p, res.q_cols);

  if (opt.transforms && opt.verify) {
    // Residual P * a0 * Q == D, streamed one row of P at a time:
    // u = (row i of P) * a0 touches only the nonzeros of a0, and u * Q only
    // the nonzeros of Q, so nothing bigger than two length-c scratch
    // vectors is ever alive.  (Materializing P * a0 wholesale is what used
    // to dominate the peak footprint on the 602x1932 reduction.)
    std::vector<SparseIntVec> a0_rows(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (a0.at(i, j) != 0) a0_rows[static_cast<size_t>(i)].emplace_back(j, a0.at(i, j));

    const Int zero(0);
    std::vector<Int> u(static_cast<size_t>(c));
    for (int i = 0; i < r; ++i) {
      std::fill(u.begin(), u.end(), Int(0));
      for (int k2 = 0; k2 < r; ++k2) {
        const Int& w = res.p.at(i, k2);
        if (w == 0) continue;
        for (const auto& [j, x] : a0_rows[static_cast<size_t>(k2)])
          u[static_cast<size_t>(j)] += w * x;
      }
      for (int j = 0; j < c; ++j) {
        Int z = 0;
        for (const auto& [kcol, w] : res.q_cols[static_cast<size_t>(j)]) {
          const Int& uk = u[static_cast<size_t>(kcol)];
          if (uk != 0) z += w * uk;
        }
        const Int& want = (i == j && i < nmin) ? res.diag[static_cast<size_t>(i)] : zero;
        if (z != want)
          throw std::logic_error("snf_integer: residual P*A*Q != D");
      }
    }
    res.verified = true;
    trace.report("verified", r, r, a, res.p, res.q_cols);
  }
  return res;
}

int rank_over_Z(const IntMat& a) {
  SmithOptions opt;
  opt.transforms = false;
  opt.verify = false;
  return snf_integer(a, opt).rank;
}

}  // namespace ybh
