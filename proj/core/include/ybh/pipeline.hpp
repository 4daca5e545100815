#pragma once

#include "ybh/cache.hpp"
#include "ybh/conjectures.hpp"
#include "ybh/homology.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybh {

// Folded into every cached artifact's config string; bump on any change
// that invalidates previously computed artifacts.
inline constexpr const char* kEngineRevision = "ybh1";

// Raised when a self-check fails: a boundary that does not square to zero,
// or a Smith decomposition whose residual does not vanish.  The CLI maps
// this (and cache corruption) to a dedicated exit code.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  ComplexSpec spec;
  int n = 1;
  Domain domain;
  std::string cache_dir;  // empty: fall back to YBH_CACHE_DIR
  std::string format = "text";  // text | json | csv
  int threads = 1;
};

// Compute-once orchestration over the result cache.  Every getter consults
// the cache first, recomputes on a miss, self-checks what it computed, and
// stores the artifact back with deterministic bytes.  Distinct cells may be
// computed from different threads; per-cell work is single-threaded.
class Pipeline {
 public:
  explicit Pipeline(ResultCache cache = ResultCache::from_env());

  ResultCache& cache() { return cache_; }

  std::vector<Tuple> basis(const ComplexSpec& spec, int n);
  BoundaryMatrix boundary(const ComplexSpec& spec, int n);

  // Cache-shaped view of a Smith decomposition of the degree-n boundary:
  // just the invariants, never the transforms.
  struct SnfSummary {
    int rows = 0;
    int cols = 0;
    int rank = 0;
    std::vector<IntPoly> diag;  // symbolic domain
    std::vector<Int> diag_int;  // integer specialization
    bool certified = false;     // meaningful for the symbolic domain
  };
  SnfSummary snf(const ComplexSpec& spec, int n, const Domain& dom);

  // H_n assembled from cached artifacts; checks boundary-squared-zero
  // whenever it has to compute, and falls back to integer corroboration at
  // t = 4 and t = 9 when a symbolic decomposition resists certification.
  HomologyModule homology(const ComplexSpec& spec, int n, const Domain& dom);

  // The grid H_n(C^{mf}) for m <= max_m, n <= max_n over Z[t], computed
  // cell-parallel with the given number of threads.  result[m-1][n-1].
  std::vector<std::vector<HomologyModule>> table1(int max_m, int max_n,
                                                  int threads = 1);

  // Opt-in exploration of the sixth homology at an integer specialization.
  // Every stage checkpoints through the cache, so the job resumes where it
  // stopped.  The default subject, final complex on 3 letters, needs a
  // 602 x 1932 integer Smith reduction; m = 4 is a multi-gigabyte job.
  struct H6Options {
    int m = 3;
    long y = 2;
    std::function<void(const std::string&)> log;  // stage progress
  };
  ConjectureReport run_h6_job(const H6Options& opt);

 private:
  std::string config_for(const ComplexSpec& spec, const std::string& kind,
                         int n, const Domain* dom) const;

  ResultCache cache_;
};

}  // namespace ybh
