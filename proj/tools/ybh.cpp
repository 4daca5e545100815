// ybh: command-line front end for the braiding homology engine.
//
// Exit codes: 0 on success, 1 on a usage or argument error, 2 when a
// computation fails its own verification (a boundary that does not square
// to zero, a Smith residual that does not vanish, a corrupt cache artifact)
// or when a checked expectation is violated.

#include "ybh/chain_maps.hpp"
#include "ybh/counting.hpp"
#include "ybh/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

ybh::ResultCache make_cache(const std::string& dir) {
  if (!dir.empty()) return ybh::ResultCache(dir);
  return ybh::ResultCache::from_env();
}

ybh::Domain make_domain(long at_y, long at_t) {
  if (at_y != 0 && at_t != 0) {
    throw std::invalid_argument("pass at most one of --at-y and --at-t");
  }
  if (at_y != 0) return ybh::Domain::at_y(at_y);
  if (at_t != 0) return ybh::Domain::at_t(ybh::Int(at_t));
  return ybh::Domain::over_zt();
}

std::string compact(std::string s) {
  std::string out;
  for (char c : s) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

// "1-y^2 ×8, 1-y^4 ×2" style multiplicity grouping; empty for free modules.
std::string torsion_breakdown(const ybh::HomologyModule& h) {
  std::vector<std::pair<std::string, long>> groups;
  auto push = [&](const std::string& s) {
    if (!groups.empty() && groups.back().first == s) {
      ++groups.back().second;
    } else {
      groups.emplace_back(s, 1);
    }
  };
  if (h.domain.symbolic) {
    for (const auto& inv : h.torsion_poly) push(compact(inv.str()));
  } else {
    for (const auto& inv : h.torsion_int) push(inv.str());
  }
  std::ostringstream os;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) os << ", ";
    os << groups[i].first << " ×" << groups[i].second;
  }
  return os.str();
}

ordered_json homology_json(const ybh::HomologyModule& h) {
  ordered_json j;
  j["free_rank"] = h.free_rank;
  ordered_json torsion = ordered_json::array();
  if (h.domain.symbolic) {
    for (const auto& inv : h.torsion_poly) torsion.push_back(inv.str());
  } else {
    for (const auto& inv : h.torsion_int) torsion.push_back(inv.str());
  }
  j["torsion"] = std::move(torsion);
  j["triple"] = h.str();
  j["certified"] = h.certified;
  j["provenance"] = h.provenance;
  j["notes"] = h.notes;
  return j;
}

void print_homology_text(const ybh::HomologyModule& h) {
  std::cout << h.str() << "\n";
  const std::string t = torsion_breakdown(h);
  if (!t.empty()) std::cout << "torsion: " << t << "\n";
  std::cout << "certified: " << (h.certified ? "yes" : "no") << "\n";
  for (const auto& note : h.notes) std::cout << "note: " << note << "\n";
}

int run_verify(int max_m) {
  int rc = 0;
  for (int m = 1; m <= max_m; ++m) {
    const bool hex = ybh::verify_ybe(m);
    const bool unital = ybh::verify_column_unital(m);
    std::cout << "m=" << m << ": hexagon "
              << (hex ? "ok" : "FAILED") << "; column sums "
              << (unital ? "ok" : "FAILED") << "\n";
    if (!hex || !unital) rc = 2;
  }
  return rc;
}

int run_verify_maps(int m, int max_n) {
  int rc = 0;
  auto line = [&](const std::string& what, bool ok) {
    std::cout << what << ": " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) rc = 2;
  };
  for (int n = 1; n <= max_n; ++n) {
    line("duality m=" + std::to_string(m) + " n=" + std::to_string(n),
         ybh::verify_tau_duality(m, n));
  }
  for (int n = 2; n <= max_n; ++n) {
    line("precubic full m=" + std::to_string(m) + " n=" + std::to_string(n),
         ybh::verify_precubic(ybh::ComplexSpec::full(m), n));
    line("precubic final m=" + std::to_string(m) + " n=" + std::to_string(n),
         ybh::verify_precubic(ybh::ComplexSpec::final_complex(m), n));
  }
  for (int u = 0; u + 1 < m; ++u) {
    for (int n = 1; n <= max_n; ++n) {
      line("split m=" + std::to_string(m) + " u=" + std::to_string(u) +
               " n=" + std::to_string(n),
           ybh::verify_split(m, u, n));
    }
  }
  return rc;
}

int run_boundary(ybh::Pipeline& pipe, const std::string& spec_str, int n,
                 const std::string& format) {
  const ybh::ComplexSpec spec = ybh::parse_spec(spec_str);
  const ybh::BoundaryMatrix b = pipe.boundary(spec, n);
  if (format == "json") {
    ordered_json j;
    j["spec"] = spec.str();
    j["n"] = n;
    j["rows"] = b.rows();
    j["cols"] = b.cols();
    ordered_json entries = ordered_json::array();
    for (const auto& e : b.entries) {
      entries.push_back(ordered_json::array({e.row, e.col, e.v.str()}));
    }
    j["entries"] = std::move(entries);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "d_" << n << " on " << spec.str() << ": " << b.cols()
            << " columns, " << b.rows() << " rows\n";
  size_t at = 0;
  for (int c = 0; c < b.cols(); ++c) {
    ybh::ChainVector v;
    while (at < b.entries.size() && b.entries[at].col == c) {
      ybh::add_term(v, b.row_basis[static_cast<size_t>(b.entries[at].row)],
                    b.entries[at].v);
      ++at;
    }
    std::cout << "d" << ybh::word_str(b.col_basis[static_cast<size_t>(c)])
              << " = " << ybh::chain_str(v) << "\n";
  }
  return 0;
}

int run_snf(ybh::Pipeline& pipe, const std::string& spec_str, int n,
            const ybh::Domain& dom, const std::string& format) {
  const ybh::ComplexSpec spec = ybh::parse_spec(spec_str);
  const ybh::Pipeline::SnfSummary s = pipe.snf(spec, n, dom);
  std::vector<std::pair<std::string, long>> groups;
  auto push = [&](const std::string& v) {
    if (!groups.empty() && groups.back().first == v) {
      ++groups.back().second;
    } else {
      groups.emplace_back(v, 1);
    }
  };
  if (dom.symbolic) {
    for (const auto& d : s.diag) push(compact(d.str()));
  } else {
    for (const auto& d : s.diag_int) push(d.str());
  }
  if (format == "json") {
    ordered_json j;
    j["spec"] = spec.str();
    j["n"] = n;
    j["domain"] = dom.tag();
    j["rows"] = s.rows;
    j["cols"] = s.cols;
    j["rank"] = s.rank;
    ordered_json diag = ordered_json::array();
    for (const auto& g : groups) {
      diag.push_back(ordered_json::array({g.first, g.second}));
    }
    j["diagonal"] = std::move(diag);
    if (dom.symbolic) j["certified"] = s.certified;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "d_" << n << " on " << spec.str() << ": " << s.rows << " x "
            << s.cols << ", rank " << s.rank << "\n";
  std::ostringstream os;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) os << ", ";
    os << groups[i].first << " ×" << groups[i].second;
  }
  std::cout << "invariant factors: " << (groups.empty() ? "none" : os.str())
            << "\n";
  if (dom.symbolic) {
    std::cout << "certified: " << (s.certified ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_homology_cmd(ybh::Pipeline& pipe, const std::string& spec_str, int n,
                     const ybh::Domain& dom, const std::string& format) {
  const ybh::ComplexSpec spec = ybh::parse_spec(spec_str);
  const ybh::HomologyModule h = pipe.homology(spec, n, dom);
  if (format == "json") {
    ordered_json j;
    j["spec"] = spec.str();
    j["n"] = n;
    j["domain"] = dom.tag();
    j["homology"] = homology_json(h);
    std::cout << j.dump(2) << "\n";
  } else {
    print_homology_text(h);
  }
  return 0;
}

int run_table1(ybh::Pipeline& pipe, int max_m, int max_n, int threads,
               const std::string& format) {
  const auto grid = pipe.table1(max_m, max_n, threads);
  bool all_certified = true;
  for (const auto& row : grid) {
    for (const auto& cell : row) all_certified &= cell.certified;
  }
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (int m = 1; m <= max_m; ++m) {
      ordered_json row = ordered_json::array();
      for (int n = 1; n <= max_n; ++n) {
        row.push_back(homology_json(grid[static_cast<size_t>(m - 1)]
                                        [static_cast<size_t>(n - 1)]));
      }
      rows.push_back(std::move(row));
    }
    ordered_json j;
    j["rows_are"] = "m";
    j["cols_are"] = "n";
    j["cells"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "m/n";
    for (int n = 1; n <= max_n; ++n) std::cout << "," << n;
    std::cout << "\n";
    for (int m = 1; m <= max_m; ++m) {
      std::cout << m;
      for (int n = 1; n <= max_n; ++n) {
        std::cout << ",\""
                  << grid[static_cast<size_t>(m - 1)]
                         [static_cast<size_t>(n - 1)]
                             .str()
                  << "\"";
      }
      std::cout << "\n";
    }
    return 0;
  }
  std::vector<size_t> width(static_cast<size_t>(max_n), 0);
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(max_m));
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      const auto& h =
          grid[static_cast<size_t>(m - 1)][static_cast<size_t>(n - 1)];
      std::string s = h.str();
      if (!h.certified) s += "*";
      width[static_cast<size_t>(n - 1)] =
          std::max(width[static_cast<size_t>(n - 1)], s.size());
      cells[static_cast<size_t>(m - 1)].push_back(std::move(s));
    }
  }
  std::cout << "    ";
  for (int n = 1; n <= max_n; ++n) {
    std::string head = "n=" + std::to_string(n);
    head.resize(std::max(width[static_cast<size_t>(n - 1)], head.size()), ' ');
    std::cout << "  " << head;
  }
  std::cout << "\n";
  for (int m = 1; m <= max_m; ++m) {
    std::cout << "m=" << m << "  ";
    for (int n = 1; n <= max_n; ++n) {
      std::string s = cells[static_cast<size_t>(m - 1)]
                           [static_cast<size_t>(n - 1)];
      s.resize(std::max(width[static_cast<size_t>(n - 1)],
                        std::string("n=0").size()),
               ' ');
      std::cout << "  " << s;
    }
    std::cout << "\n";
  }
  if (!all_certified) {
    std::cout << "* invariant factors computed over Q[t], not certified over "
                 "Z[t]; corroborated by independent integer runs at t=4 and "
                 "t=9\n";
  }
  return 0;
}

int run_hn(ybh::Pipeline& pipe, int n, int m, const ybh::Domain& dom) {
  const int jmax = std::min(m, n + 1);
  std::map<int, ybh::HomologyModule> initial;
  for (int j = 1; j <= jmax; ++j) {
    initial.emplace(j,
                    pipe.homology(ybh::ComplexSpec::final_complex(j), n, dom));
  }
  const ybh::HomologyModule assembled =
      ybh::assemble_decomposition(m, n, initial);
  std::cout << "assembled:   " << assembled.str() << "\n";
  if (!dom.symbolic || (n != 3 && n != 4)) return 0;
  const ybh::HomologyModule closed =
      n == 3 ? ybh::closed_form_h3(m) : ybh::closed_form_h4(m);
  std::cout << "closed form: " << closed.str() << "\n";
  const ybh::CompareResult cmp = ybh::compare(assembled, closed);
  if (cmp.equal) {
    std::cout << "verdict: agree\n";
    return 0;
  }
  std::cout << "verdict: DISAGREE (" << cmp.diff << ")\n";
  return 2;
}

int run_ranks(int max_n, int max_m, const std::string& format) {
  const ybh::CountTable table = ybh::rank_table(max_n, max_m);
  std::cout << (format == "csv" ? table.csv() : table.str());
  return 0;
}

int report_out(const ybh::ConjectureReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.to_json();
  } else {
    std::cout << rep.str();
  }
  return rep.any_violated() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "homology of the normalized two-parameter braiding operators"};
  app.require_subcommand(1);

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir,
                 "artifact cache root (default: $YBH_CACHE_DIR; empty "
                 "disables caching)");

  // verify
  auto* c_verify = app.add_subcommand(
      "verify", "hexagon relation and column sums for small alphabets");
  int verify_max_m = 5;
  c_verify->add_option("--max-m", verify_max_m, "largest alphabet to check")
      ->check(CLI::Range(1, 250));

  // verify-maps
  auto* c_maps = app.add_subcommand(
      "verify-maps",
      "duality, precubic identities, and splitting pairs in low degrees");
  int maps_m = 3, maps_max_n = 4;
  c_maps->add_option("--m", maps_m, "alphabet size")->check(CLI::Range(1, 250));
  c_maps->add_option("--max-n", maps_max_n, "largest degree to check")
      ->check(CLI::Range(1, 12));

  // boundary
  auto* c_boundary =
      app.add_subcommand("boundary", "print one boundary matrix");
  std::string boundary_spec;
  int boundary_n = 1;
  std::string boundary_format = "text";
  c_boundary->add_option("--spec", boundary_spec, "complex, e.g. final:m=3")
      ->required();
  c_boundary->add_option("--n", boundary_n, "degree")->required();
  c_boundary->add_option("--format", boundary_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // snf
  auto* c_snf = app.add_subcommand(
      "snf", "invariant factors of one boundary matrix");
  std::string snf_spec;
  int snf_n = 1;
  long snf_at_y = 0, snf_at_t = 0;
  std::string snf_format = "text";
  c_snf->add_option("--spec", snf_spec, "complex, e.g. final:m=3")->required();
  c_snf->add_option("--n", snf_n, "degree")->required();
  c_snf->add_option("--at-y", snf_at_y, "specialize to t = y^2");
  c_snf->add_option("--at-t", snf_at_t, "specialize to an integer t");
  c_snf->add_option("--format", snf_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // homology
  auto* c_hom = app.add_subcommand("homology", "H_n of one complex");
  std::string hom_spec;
  int hom_n = 1;
  long hom_at_y = 0, hom_at_t = 0;
  std::string hom_format = "text";
  c_hom->add_option("--spec", hom_spec, "complex, e.g. final:m=3")->required();
  c_hom->add_option("--n", hom_n, "degree")->required();
  c_hom->add_option("--at-y", hom_at_y, "specialize to t = y^2");
  c_hom->add_option("--at-t", hom_at_t, "specialize to an integer t");
  c_hom->add_option("--format", hom_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // table1
  auto* c_table = app.add_subcommand(
      "table1", "grid of H_n for the final complexes, rows m by columns n");
  int table_max_m = 5, table_max_n = 4, table_threads = 1;
  std::string table_format = "text";
  c_table->add_option("--max-m", table_max_m, "rows")->check(CLI::Range(1, 8));
  c_table->add_option("--max-n", table_max_n, "columns")
      ->check(CLI::Range(1, 8));
  c_table->add_option("--threads", table_threads, "parallel cells")
      ->check(CLI::Range(1, 64));
  c_table->add_option("--format", table_format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // hn
  auto* c_hn = app.add_subcommand(
      "hn", "H_n of the full complex assembled from the final pieces, "
            "checked against the closed form when one is known (n = 3, 4)");
  int hn_n = 3, hn_m = 3;
  long hn_at_y = 0, hn_at_t = 0;
  c_hn->add_option("--n", hn_n, "degree")->required()->check(CLI::Range(1, 7));
  c_hn->add_option("--m", hn_m, "alphabet size")
      ->required()
      ->check(CLI::Range(1, 64));
  c_hn->add_option("--at-y", hn_at_y, "specialize to t = y^2");
  c_hn->add_option("--at-t", hn_at_t, "specialize to an integer t");

  // ranks
  auto* c_ranks = app.add_subcommand(
      "ranks", "basis counts of the final complexes, three independent ways");
  int ranks_max_n = 7, ranks_max_m = 7;
  std::string ranks_format = "text";
  c_ranks->add_option("--max-n", ranks_max_n, "largest degree")
      ->check(CLI::Range(1, 12));
  c_ranks->add_option("--max-m", ranks_max_m, "largest alphabet")
      ->check(CLI::Range(1, 12));
  c_ranks->add_option("--format", ranks_format, "text | csv")
      ->check(CLI::IsMember({"text", "csv"}));

  // conjecture
  auto* c_conj = app.add_subcommand(
      "conjecture", "probe a recorded expectation against fresh computation");
  c_conj->require_subcommand(1);
  std::string conj_format = "text";
  c_conj->add_option("--format", conj_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_free = c_conj->add_subcommand(
      "free-rank", "free ranks of the final and full complexes");
  int free_max_n = 4, free_max_m = 5;
  c_free->add_option("--max-n", free_max_n, "largest degree")
      ->check(CLI::Range(1, 8));
  c_free->add_option("--max-m", free_max_m, "largest alphabet")
      ->check(CLI::Range(1, 8));

  auto* c_fib = c_conj->add_subcommand(
      "fibonacci", "torsion counts of the two-letter complex");
  int fib_max_n = 4;
  c_fib->add_option("--max-n", fib_max_n, "largest degree")
      ->check(CLI::Range(2, 8));

  auto* c_h5 = c_conj->add_subcommand(
      "h5", "fifth homology of one final piece at t = 4 and t = 9");
  int h5_j = 2;
  c_h5->add_option("--j", h5_j, "letters in the piece")
      ->check(CLI::Range(1, 6));

  auto* c_kun = c_conj->add_subcommand(
      "kunneth", "product rule and additivity for the split subcomplex");
  int kun_m = 3, kun_split = 1, kun_n = 4;
  c_kun->add_option("--m", kun_m, "alphabet size")->check(CLI::Range(2, 6));
  c_kun->add_option("--split", kun_split, "letters in the bottom block");
  c_kun->add_option("--n", kun_n, "largest degree")->check(CLI::Range(1, 8));

  auto* c_mfl = c_conj->add_subcommand(
      "mfl", "top-letter filtration: sub, full, quotient, and additivity");
  int mfl_m = 2, mfl_cap = 1, mfl_n = 4;
  long mfl_at_y = 2;
  c_mfl->add_option("--m", mfl_m, "alphabet size")->check(CLI::Range(2, 6));
  c_mfl->add_option("--cap", mfl_cap, "most uses of the top letter kept");
  c_mfl->add_option("--n", mfl_n, "degree")->check(CLI::Range(1, 8));
  c_mfl->add_option("--at-y", mfl_at_y, "evaluate at t = y^2");

  auto* c_h6 = c_conj->add_subcommand(
      "h6",
      "sixth homology at an integer point, assembled from the final pieces. "
      "The default m=3 ends in a 602 x 1932 integer reduction and takes "
      "minutes; m=4 adds a 2100 x 10206 reduction and needs several GB of "
      "memory. Checkpoints through the cache, so an interrupted run resumes.");
  int h6_m = 3;
  long h6_at_y = 2;
  c_h6->add_option("--m", h6_m, "alphabet size")->check(CLI::Range(1, 4));
  c_h6->add_option("--at-y", h6_at_y, "evaluate at t = y^2");

  // cache
  auto* c_cache = app.add_subcommand("cache", "artifact cache maintenance");
  c_cache->require_subcommand(1);
  auto* c_gc = c_cache->add_subcommand(
      "gc", "drop stray temporaries and corrupt artifacts");

  int rc = 0;

  c_verify->callback([&] { rc = run_verify(verify_max_m); });
  c_maps->callback([&] { rc = run_verify_maps(maps_m, maps_max_n); });
  c_boundary->callback([&] {
    ybh::Pipeline pipe(make_cache(cache_dir));
    rc = run_boundary(pipe, boundary_spec, boundary_n, boundary_format);
  });
  c_snf->callback([&] {
    ybh::Pipeline pipe(make_cache(cache_dir));
    rc = run_snf(pipe, snf_spec, snf_n, make_domain(snf_at_y, snf_at_t),
                 snf_format);
  });
  c_hom->callback([&] {
    ybh::Pipeline pipe(make_cache(cache_dir));
    rc = run_homology_cmd(pipe, hom_spec, hom_n,
                          make_domain(hom_at_y, hom_at_t), hom_format);
  });
  c_table->callback([&] {
    ybh::Pipeline pipe(make_cache(cache_dir));
    rc = run_table1(pipe, table_max_m, table_max_n, table_threads,
                    table_format);
  });
  c_hn->callback([&] {
    ybh::Pipeline pipe(make_cache(cache_dir));
    rc = run_hn(pipe, hn_n, hn_m, make_domain(hn_at_y, hn_at_t));
  });
  c_ranks->callback(
      [&] { rc = run_ranks(ranks_max_n, ranks_max_m, ranks_format); });

  c_free->callback([&] {
    rc = report_out(ybh::check_free_rank(free_max_n, free_max_m), conj_format);
  });
  c_fib->callback(
      [&] { rc = report_out(ybh::check_fibonacci_m2(fib_max_n), conj_format); });
  c_h5->callback([&] { rc = report_out(ybh::check_h5(h5_j), conj_format); });
  c_kun->callback([&] {
    rc = report_out(ybh::check_kunneth(kun_m, kun_split, kun_n), conj_format);
  });
  c_mfl->callback([&] {
    rc = report_out(
        ybh::check_mfl_split(mfl_m, mfl_cap, mfl_n,
                             ybh::Int(mfl_at_y) * mfl_at_y),
        conj_format);
  });
  c_h6->callback([&] {
    ybh::Pipeline pipe(make_cache(cache_dir));
    ybh::Pipeline::H6Options opt;
    opt.m = h6_m;
    opt.y = h6_at_y;
    opt.log = [](const std::string& s) { std::cerr << "[h6] " << s << "\n"; };
    rc = report_out(pipe.run_h6_job(opt), conj_format);
  });
  c_gc->callback([&] {
    ybh::ResultCache cache = make_cache(cache_dir);
    if (!cache.enabled()) {
      throw std::invalid_argument(
          "no cache root: set YBH_CACHE_DIR or pass --cache-dir");
    }
    const ybh::ResultCache::GcStats stats = cache.gc();
    std::cout << "scanned " << stats.scanned << ", removed " << stats.removed
              << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ybh::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
