#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "ybh/cache.hpp"

using namespace ybh;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ybh-cache-test-" + std::to_string(std::rand()) + "-" +
            std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("checksum is stable") {
  CHECK(fnv1a_hex("") == fnv1a_hex(""));
  CHECK(fnv1a_hex("abc") != fnv1a_hex("abd"));
  CHECK(fnv1a_hex("abc").size() == 16);
}

TEST_CASE("disabled cache misses and drops") {
  ResultCache cache;
  CHECK_FALSE(cache.enabled());
  cache.store("x/y.json", "cfg", "payload");
  CHECK_FALSE(cache.load("x/y.json", "cfg").has_value());
}

TEST_CASE("artifact paths are per-complex directories") {
  const std::string p =
      ResultCache::artifact_path(ComplexSpec::final_complex(3), "snf", 4, "zt");
  CHECK(p == "m3u2l1/snf-n4-zt.json");
  const std::string q =
      ResultCache::artifact_path(ComplexSpec::full(2), "basis", 5);
  CHECK(q == "m2u0l2/basis-n5.json");
}

TEST_CASE("round trip, hit and miss accounting") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  CHECK(cache.enabled());

  CHECK_FALSE(cache.load("d/a.json", "cfg-1").has_value());
  CHECK(cache.misses() == 1);

  cache.store("d/a.json", "cfg-1", "{\"v\":42}");
  const auto got = cache.load("d/a.json", "cfg-1");
  REQUIRE(got.has_value());
  CHECK(*got == "{\"v\":42}");
  CHECK(cache.hits() == 1);
}

TEST_CASE("rewritten payload bytes are deterministic") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  cache.store("d/a.json", "cfg", "payload-bytes");
  const std::string first = slurp(tmp.path / "d" / "a.json");
  cache.store("d/a.json", "cfg", "payload-bytes");
  const std::string second = slurp(tmp.path / "d" / "a.json");
  CHECK(first == second);
  CHECK_FALSE(first.empty());
}

TEST_CASE("config mismatch is a miss, not an error") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  cache.store("d/a.json", "engine-rev-1", "old");
  CHECK_FALSE(cache.load("d/a.json", "engine-rev-2").has_value());
  // The stale artifact is recomputed and overwritten by the caller.
  cache.store("d/a.json", "engine-rev-2", "new");
  const auto got = cache.load("d/a.json", "engine-rev-2");
  REQUIRE(got.has_value());
  CHECK(*got == "new");
}

TEST_CASE("corruption is loud") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  cache.store("d/a.json", "cfg", "payload");

  // Flip payload bytes under the stored checksum.
  const fs::path file = tmp.path / "d" / "a.json";
  std::string bytes = slurp(file);
  const size_t pos = bytes.find("payload");
  REQUIRE(pos != std::string::npos);
  bytes[pos] = 'q';
  std::ofstream(file, std::ios::binary) << bytes;

  CHECK_THROWS_AS(cache.load("d/a.json", "cfg"), std::runtime_error);
}

TEST_CASE("gc removes corrupt artifacts and stray temp files") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  cache.store("d/good.json", "cfg", "payload");
  cache.store("d/bad.json", "cfg", "payload");

  const fs::path bad = tmp.path / "d" / "bad.json";
  std::ofstream(bad, std::ios::binary) << "not an envelope";
  std::ofstream(tmp.path / "d" / "leftover.json.tmp123") << "partial";

  const auto stats = cache.gc();
  CHECK(stats.scanned >= 2);
  CHECK(stats.removed == 2);
  CHECK_FALSE(fs::exists(bad));
  CHECK(fs::exists(tmp.path / "d" / "good.json"));
  CHECK(cache.load("d/good.json", "cfg").has_value());

  // Idempotent: a second sweep finds nothing else to remove.
  CHECK(cache.gc().removed == 0);
}

}  // TEST_SUITE
