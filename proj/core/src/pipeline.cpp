#include "ybh/pipeline.hpp"

#include "ybh/counting.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

namespace ybh {

namespace {

using nlohmann::ordered_json;

ordered_json words_json(const std::vector<Tuple>& words) {
  ordered_json arr = ordered_json::array();
  for (const Tuple& w : words) {
    ordered_json jw = ordered_json::array();
    for (Letter l : w) jw.push_back(static_cast<int>(l));
    arr.push_back(std::move(jw));
  }
  return arr;
}

std::vector<Tuple> words_from_json(const nlohmann::json& arr,
                                   const std::string& where) {
  if (!arr.is_array()) {
    throw std::runtime_error("cache: malformed word list in " + where);
  }
  std::vector<Tuple> out;
  out.reserve(arr.size());
  for (const auto& jw : arr) {
    Tuple w;
    for (const auto& l : jw) w.push_back(static_cast<Letter>(l.get<int>()));
    out.push_back(std::move(w));
  }
  return out;
}

std::string basis_payload(const std::vector<Tuple>& words) {
  ordered_json j;
  j["words"] = words_json(words);
  return j.dump();
}

std::string boundary_payload(const BoundaryMatrix& b) {
  ordered_json j;
  j["rows"] = b.rows();
  j["cols"] = b.cols();
  j["row_basis"] = words_json(b.row_basis);
  j["col_basis"] = words_json(b.col_basis);
  ordered_json entries = ordered_json::array();
  for (const auto& e : b.entries) {
    entries.push_back(ordered_json::array({e.row, e.col, e.v.str()}));
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

BoundaryMatrix boundary_from_payload(const ComplexSpec& spec, int n,
                                     const std::string& payload,
                                     const std::string& where) {
  const nlohmann::json j = nlohmann::json::parse(payload);
  BoundaryMatrix b;
  b.spec = spec;
  b.n = n;
  b.row_basis = words_from_json(j.at("row_basis"), where);
  b.col_basis = words_from_json(j.at("col_basis"), where);
  for (const auto& je : j.at("entries")) {
    BoundaryMatrix::Entry e;
    e.row = je.at(0).get<int>();
    e.col = je.at(1).get<int>();
    e.v = IntPoly::parse(je.at(2).get<std::string>());
    if (e.row < 0 || e.row >= static_cast<int>(b.row_basis.size()) ||
        e.col < 0 || e.col >= static_cast<int>(b.col_basis.size())) {
      throw std::runtime_error("cache: entry out of range in " + where);
    }
    b.entries.push_back(std::move(e));
  }
  return b;
}

std::string snf_payload(const Pipeline::SnfSummary& s, bool symbolic) {
  ordered_json j;
  j["rows"] = s.rows;
  j["cols"] = s.cols;
  j["rank"] = s.rank;
  ordered_json diag = ordered_json::array();
  if (symbolic) {
    for (const IntPoly& d : s.diag) diag.push_back(d.str());
    j["certified"] = s.certified;
  } else {
    for (const Int& d : s.diag_int) diag.push_back(d.str());
  }
  j["diag"] = std::move(diag);
  return j.dump();
}

Pipeline::SnfSummary snf_from_payload(const std::string& payload,
                                      bool symbolic) {
  const nlohmann::json j = nlohmann::json::parse(payload);
  Pipeline::SnfSummary s;
  s.rows = j.at("rows").get<int>();
  s.cols = j.at("cols").get<int>();
  s.rank = j.at("rank").get<int>();
  for (const auto& d : j.at("diag")) {
    if (symbolic) {
      s.diag.push_back(IntPoly::parse(d.get<std::string>()));
    } else {
      s.diag_int.emplace_back(d.get<std::string>());
    }
  }
  if (symbolic) s.certified = j.at("certified").get<bool>();
  return s;
}

std::string homology_payload(const HomologyModule& h) {
  ordered_json j;
  j["free_rank"] = h.free_rank;
  ordered_json torsion = ordered_json::array();
  if (h.domain.symbolic) {
    for (const IntPoly& inv : h.torsion_poly) torsion.push_back(inv.str());
  } else {
    for (const Int& inv : h.torsion_int) torsion.push_back(inv.str());
  }
  j["torsion"] = std::move(torsion);
  j["provenance"] = h.provenance;
  j["certified"] = h.certified;
  j["notes"] = h.notes;
  return j.dump();
}

HomologyModule homology_from_payload(const std::string& payload,
                                     const Domain& dom) {
  const nlohmann::json j = nlohmann::json::parse(payload);
  HomologyModule h;
  h.domain = dom;
  h.free_rank = j.at("free_rank").get<long>();
  for (const auto& inv : j.at("torsion")) {
    if (dom.symbolic) {
      h.torsion_poly.push_back(IntPoly::parse(inv.get<std::string>()));
    } else {
      h.torsion_int.emplace_back(inv.get<std::string>());
    }
  }
  h.provenance = j.at("provenance").get<std::string>();
  h.certified = j.at("certified").get<bool>();
  h.notes = j.at("notes").get<std::vector<std::string>>();
  return h;
}

}  // namespace

Pipeline::Pipeline(ResultCache cache) : cache_(std::move(cache)) {}

std::string Pipeline::config_for(const ComplexSpec& spec,
                                 const std::string& kind, int n,
                                 const Domain* dom) const {
  std::string c = std::string(kEngineRevision) + "|" + spec.str() + "|" +
                  kind + "|n=" + std::to_string(n);
  c += "|";
  c += dom ? dom->tag() : "-";
  return c;
}

std::vector<Tuple> Pipeline::basis(const ComplexSpec& spec, int n) {
  const std::string path = ResultCache::artifact_path(spec, "basis", n);
  const std::string config = config_for(spec, "basis", n, nullptr);
  if (auto hit = cache_.load(path, config)) {
    return words_from_json(nlohmann::json::parse(*hit).at("words"), path);
  }
  std::vector<Tuple> words = enumerate_basis(spec, n);
  cache_.store(path, config, basis_payload(words));
  return words;
}

BoundaryMatrix Pipeline::boundary(const ComplexSpec& spec, int n) {
  const std::string path = ResultCache::artifact_path(spec, "boundary", n);
  const std::string config = config_for(spec, "boundary", n, nullptr);
  if (auto hit = cache_.load(path, config)) {
    return boundary_from_payload(spec, n, *hit, path);
  }
  // Make sure the basis artifacts around this degree exist alongside.
  basis(spec, n);
  if (n >= 1) basis(spec, n - 1);
  BoundaryMatrix b = boundary_matrix(spec, n);
  cache_.store(path, config, boundary_payload(b));
  return b;
}

Pipeline::SnfSummary Pipeline::snf(const ComplexSpec& spec, int n,
                                   const Domain& dom) {
  const std::string path =
      ResultCache::artifact_path(spec, "snf", n, dom.tag());
  const std::string config = config_for(spec, "snf", n, &dom);
  if (auto hit = cache_.load(path, config)) {
    return snf_from_payload(*hit, dom.symbolic);
  }
  const BoundaryMatrix b = boundary(spec, n);
  SnfSummary s;
  s.rows = b.rows();
  s.cols = b.cols();
  SmithOptions so;
  so.transforms = true;
  so.verify = true;
  try {
    if (dom.symbolic) {
      const PolyMat a = b.dense();
      SmithPolyResult r = snf_poly(a, so);
      s.rank = r.rank;
      s.diag = r.diag;
      s.certified = certify_over_Zt(r, a);
    } else {
      const SmithIntResult r = snf_integer(b.dense_at(dom.t), so);
      s.rank = r.rank;
      s.diag_int = r.diag;
    }
  } catch (const std::logic_error& e) {
    // The engines throw when their own residual check fails.
    throw VerificationError(std::string("Smith reduction self-check failed: ") +
                            e.what());
  }
  cache_.store(path, config, snf_payload(s, dom.symbolic));
  return s;
}

HomologyModule Pipeline::homology(const ComplexSpec& spec, int n,
                                  const Domain& dom) {
  if (n < 1) throw std::invalid_argument("homology: n must be >= 1");
  const std::string path =
      ResultCache::artifact_path(spec, "homology", n, dom.tag());
  const std::string config = config_for(spec, "homology", n, &dom);
  if (auto hit = cache_.load(path, config)) {
    return homology_from_payload(*hit, dom);
  }

  const BoundaryMatrix down = boundary(spec, n);
  const BoundaryMatrix up = boundary(spec, n + 1);
  if (!verify_boundary_squared(down, up)) {
    throw VerificationError("boundary does not square to zero for " +
                            spec.str() + " between degrees " +
                            std::to_string(n + 1) + " and " +
                            std::to_string(n - 1));
  }

  const SnfSummary sdown = snf(spec, n, dom);
  const SnfSummary sup = snf(spec, n + 1, dom);

  HomologyModule h;
  h.domain = dom;
  h.provenance = "direct";
  h.free_rank = static_cast<long>(sdown.cols) - sdown.rank - sup.rank;
  if (h.free_rank < 0) {
    throw VerificationError("negative free rank for " + spec.str() +
                            " at n=" + std::to_string(n));
  }

  if (dom.symbolic) {
    for (const IntPoly& d : sup.diag) {
      if (!d.is_zero() && !d.is_unit()) {
        h.torsion_poly.push_back(normalize_invariant(d));
      }
    }
    h.certified = sup.certified;
    if (!h.certified) {
      h.notes.push_back(
          "invariants computed over Q[t]; transforms not certified over Z[t]");
      bool all_ok = true;
      for (long y = 2; y <= 3; ++y) {
        const Domain di = Domain::at_y(y);
        const SnfSummary idown = snf(spec, n, di);
        const SnfSummary iup = snf(spec, n + 1, di);
        const long free_z =
            static_cast<long>(idown.cols) - idown.rank - iup.rank;
        std::map<Int, long> expect;
        bool zero_hit = false;
        for (const IntPoly& inv : h.torsion_poly) {
          const Int v = abs(inv.eval(di.t));
          if (v.is_zero()) {
            zero_hit = true;
          } else if (v != 1) {
            ++expect[v];
          }
        }
        std::map<Int, long> got;
        for (const Int& d : iup.diag_int) {
          if (d > 1) ++got[d];
        }
        std::ostringstream note;
        note << "integer cross-check at t=" << di.t.str() << ": ";
        if (!zero_hit && got == expect && free_z == h.free_rank) {
          note << "free rank and elementary divisors agree";
        } else {
          all_ok = false;
          note << "MISMATCH (free rank " << free_z << " vs " << h.free_rank
               << ")";
        }
        h.notes.push_back(note.str());
      }
      if (all_ok) {
        h.notes.push_back(
            "independent integer computations at t=4 and t=9 corroborate "
            "the uncertified invariants");
      }
    }
  } else {
    for (const Int& d : sup.diag_int) {
      if (d > 1) h.torsion_int.push_back(d);
    }
    h.certified = true;
  }
  h.canonicalize();
  cache_.store(path, config, homology_payload(h));
  return h;
}

std::vector<std::vector<HomologyModule>> Pipeline::table1(int max_m, int max_n,
                                                          int threads) {
  if (max_m < 1 || max_n < 1) {
    throw std::invalid_argument("table1: bounds must be >= 1");
  }
  std::vector<std::vector<HomologyModule>> out(
      max_m, std::vector<HomologyModule>(max_n));
  std::vector<std::pair<int, int>> cells;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) cells.emplace_back(m, n);
  }

  const int workers = std::max(
      1, std::min(threads, static_cast<int>(cells.size())));
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;

  auto run = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const auto [m, n] = cells[i];
      try {
        out[m - 1][n - 1] =
            homology(ComplexSpec::final_complex(m), n, Domain::over_zt());
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(run);
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

ConjectureReport Pipeline::run_h6_job(const H6Options& opt) {
  if (opt.m < 1) throw std::invalid_argument("run_h6_job: need m >= 1");
  const Domain dom = Domain::at_y(opt.y);
  auto say = [&](const std::string& s) {
    if (opt.log) opt.log(s);
  };

  ConjectureReport rep;
  rep.conjecture = "h6";
  rep.parameters = "m=" + std::to_string(opt.m) + ", t=" + dom.t.str();

  // The decomposition needs the degree-6 homology of every final complex up
  // to min(m, 7) letters; the piece on j letters is the expensive one.
  const int jmax = std::min(opt.m, 7);
  std::map<int, HomologyModule> initial;
  for (int j = 1; j <= jmax; ++j) {
    const ComplexSpec spec = ComplexSpec::final_complex(j);
    say("piece " + std::to_string(j) + "/" + std::to_string(jmax) +
        ": bases and boundaries for " + spec.str());
    const auto b6 = basis(spec, 6);
    const auto b7 = basis(spec, 7);

    // Cheap integrity gate before the heavy algebra: basis sizes must match
    // the closed-form count.
    ConjectureCell count_cell;
    count_cell.label = "piece j=" + std::to_string(j) + " basis counts";
    const Int want6 = s_tilde(6, j, j - 1, CountMethod::inclusion_exclusion);
    const Int want7 = s_tilde(7, j, j - 1, CountMethod::inclusion_exclusion);
    count_cell.expected = want6.str() + " / " + want7.str();
    count_cell.computed =
        std::to_string(b6.size()) + " / " + std::to_string(b7.size());
    count_cell.verdict =
        (Int(b6.size()) == want6 && Int(b7.size()) == want7) ? "consistent"
                                                             : "violated";
    count_cell.cache_keys = {ResultCache::artifact_path(spec, "basis", 6),
                             ResultCache::artifact_path(spec, "basis", 7)};
    rep.cells.push_back(std::move(count_cell));

    say("piece " + std::to_string(j) + "/" + std::to_string(jmax) +
        ": boundary self-check and Smith reduction (" +
        std::to_string(b6.size()) + " x " + std::to_string(b7.size()) + ")");
    const HomologyModule h = homology(spec, 6, dom);

    ConjectureCell piece_cell;
    piece_cell.label = "piece j=" + std::to_string(j);
    piece_cell.computed = h.str();
    piece_cell.expected = "free rank 1";
    piece_cell.verdict = (h.free_rank == 1) ? "consistent" : "violated";
    piece_cell.cache_keys = {
        ResultCache::artifact_path(spec, "homology", 6, dom.tag()),
        ResultCache::artifact_path(spec, "snf", 7, dom.tag())};
    rep.cells.push_back(std::move(piece_cell));
    initial.emplace(j, h);
  }

  say("assembling the full complex from the pieces");
  const HomologyModule full = assemble_decomposition(opt.m, 6, initial);

  ConjectureCell full_cell;
  full_cell.label = "assembled m=" + std::to_string(opt.m);
  full_cell.computed = full.str();
  Int want_free = 0;
  for (int k = 0; k <= std::min(6, opt.m - 1); ++k) {
    want_free += binomial(opt.m - 1, k);
  }
  full_cell.expected = "free rank " + want_free.str();
  full_cell.verdict =
      (Int(full.free_rank) == want_free) ? "consistent" : "violated";
  rep.cells.push_back(std::move(full_cell));

  // Classify the integer torsion against the candidate family
  // (1-t) [k]_t! and probe the lower bound on the deepest summand.
  const std::vector<IntPoly> patterns = torsion_pattern_candidates(6);
  std::map<Int, int> pattern_of;  // |value at t| -> pattern index
  for (size_t k = 0; k < patterns.size(); ++k) {
    pattern_of[abs(patterns[k].eval(dom.t))] = static_cast<int>(k);
  }
  std::vector<long> counts(patterns.size(), 0);
  long unmatched = 0;
  for (const Int& d : full.torsion_int) {
    const auto it = pattern_of.find(d);
    if (it == pattern_of.end()) {
      ++unmatched;
    } else {
      ++counts[it->second];
    }
  }
  ConjectureCell classify_cell;
  classify_cell.label = "torsion classification";
  classify_cell.expected = "every divisor of the form (1-t)[k]_t! at t";
  {
    std::ostringstream os;
    for (size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      os << counts[k] << " of " << patterns[k].str() << "; ";
    }
    os << unmatched << " unmatched";
    classify_cell.computed = os.str();
  }
  classify_cell.verdict = (unmatched == 0) ? "consistent" : "violated";
  rep.cells.push_back(std::move(classify_cell));

  ConjectureCell bound_cell;
  bound_cell.label = "deep torsion lower bound";
  const long d6 = counts.size() >= 3 ? counts[2] : 0;
  const long bound = static_cast<long>(opt.m) * (opt.m - 1);
  bound_cell.expected =
      "at least " + std::to_string(bound) + " summands of the third kind";
  bound_cell.computed = std::to_string(d6);
  bound_cell.verdict = (d6 >= bound) ? "consistent" : "violated";
  rep.cells.push_back(std::move(bound_cell));

  say("done");
  return rep;
}

}  // namespace ybh
