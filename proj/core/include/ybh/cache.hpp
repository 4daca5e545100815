#pragma once

#include "ybh/complex_spec.hpp"

#include <atomic>
#include <optional>
#include <string>

namespace ybh {

// On-disk result cache.  Layout: one directory per complex (its key()),
// one JSON file per artifact:
//
//   <root>/m3u2l1/basis-n4.json
//   <root>/m3u2l1/boundary-n4.json
//   <root>/m3u2l1/snf-n4-zt.json
//   <root>/m3u2l1/homology-n3-t4.json
//
// Every file is an envelope {schema, config, checksum, payload}: the
// producing configuration is stored verbatim and the checksum covers the
// payload bytes.  Reads validate both; a checksum failure is treated as
// corruption (std::runtime_error), while a config mismatch is treated as a
// stale artifact and reported as a miss so the caller recomputes and
// overwrites.  Writes go through a temp file and an atomic rename, and the
// stored bytes are deterministic, so a rerun with a warm cache is
// byte-identical and performs no recomputation.
class ResultCache {
 public:
  // Empty root disables the cache (loads miss, stores are dropped).
  explicit ResultCache(std::string root = "");

  ResultCache(ResultCache&& o) noexcept
      : root_(std::move(o.root_)),
        hits_(o.hits_.load()),
        misses_(o.misses_.load()) {}
  ResultCache& operator=(ResultCache&& o) noexcept {
    root_ = std::move(o.root_);
    hits_ = o.hits_.load();
    misses_ = o.misses_.load();
    return *this;
  }

  // Root from the YBH_CACHE_DIR environment variable, if set.
  static ResultCache from_env();

  bool enabled() const { return !root_.empty(); }
  const std::string& root() const { return root_; }

  static std::string artifact_path(const ComplexSpec& spec,
                                   const std::string& kind, int n,
                                   const std::string& domain_tag = "");

  std::optional<std::string> load(const std::string& rel_path,
                                  const std::string& config);
  void store(const std::string& rel_path, const std::string& config,
             const std::string& payload);

  struct GcStats {
    int scanned = 0;
    int removed = 0;  // corrupt envelopes and leftover temp files
  };
  // Removes unreadable or checksum-failing artifacts and stray temp files.
  GcStats gc();

  int hits() const { return hits_.load(); }
  int misses() const { return misses_.load(); }

 private:
  std::string root_;
  std::atomic<int> hits_{0};
  std::atomic<int> misses_{0};
};

// Checksum used by the cache envelopes (FNV-1a, 64-bit), exposed for tests.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ybh
