#include "ybh/cache.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace ybh {

namespace {

constexpr const char* kSchema = "ybh-cache-1";

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cache: cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

ResultCache::ResultCache(std::string root) : root_(std::move(root)) {}

ResultCache ResultCache::from_env() {
  const char* dir = std::getenv("YBH_CACHE_DIR");
  return ResultCache(dir ? std::string(dir) : std::string());
}

std::string ResultCache::artifact_path(const ComplexSpec& spec,
                                       const std::string& kind, int n,
                                       const std::string& domain_tag) {
  std::string name = spec.key() + "/" + kind + "-n" + std::to_string(n);
  if (!domain_tag.empty()) name += "-" + domain_tag;
  return name + ".json";
}

std::optional<std::string> ResultCache::load(const std::string& rel_path,
                                             const std::string& config) {
  if (!enabled()) {
    ++misses_;
    return std::nullopt;
  }
  const fs::path p = fs::path(root_) / rel_path;
  if (!fs::exists(p)) {
    ++misses_;
    return std::nullopt;
  }
  nlohmann::json env;
  try {
    env = nlohmann::json::parse(read_file(p));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("cache: corrupt artifact (bad JSON) at " +
                             p.string() + ": " + e.what());
  }
  if (!env.is_object() || env.value("schema", "") != kSchema ||
      !env.contains("config") || !env.contains("checksum") ||
      !env.contains("payload")) {
    throw std::runtime_error("cache: corrupt artifact (bad envelope) at " +
                             p.string());
  }
  std::string payload = env["payload"].get<std::string>();
  if (env["checksum"].get<std::string>() != fnv1a_hex(payload)) {
    throw std::runtime_error("cache: corrupt artifact (checksum mismatch) at " +
                             p.string());
  }
  if (env["config"].get<std::string>() != config) {
    // Produced by a different configuration or engine revision: stale.
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return payload;
}

void ResultCache::store(const std::string& rel_path, const std::string& config,
                        const std::string& payload) {
  if (!enabled()) return;
  const fs::path p = fs::path(root_) / rel_path;
  fs::create_directories(p.parent_path());

  nlohmann::ordered_json env;
  env["schema"] = kSchema;
  env["config"] = config;
  env["checksum"] = fnv1a_hex(payload);
  env["payload"] = payload;
  const std::string bytes = env.dump(1) + "\n";

  static std::atomic<unsigned> counter{0};
  const fs::path tmp =
      p.parent_path() /
      (p.filename().string() + ".tmp" + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cache: cannot write " + tmp.string());
    }
    out << bytes;
    if (!out.flush()) {
      throw std::runtime_error("cache: short write at " + tmp.string());
    }
  }
  fs::rename(tmp, p);
}

ResultCache::GcStats ResultCache::gc() {
  GcStats stats;
  if (!enabled() || !fs::exists(root_)) return stats;
  for (const auto& entry : fs::recursive_directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    const fs::path p = entry.path();
    const std::string name = p.filename().string();
    if (name.find(".tmp") != std::string::npos) {
      fs::remove(p);
      ++stats.removed;
      continue;
    }
    if (p.extension() != ".json") continue;
    ++stats.scanned;
    bool ok = false;
    try {
      const nlohmann::json env = nlohmann::json::parse(read_file(p));
      ok = env.is_object() && env.value("schema", "") == kSchema &&
           env.contains("checksum") && env.contains("payload") &&
           env["checksum"].get<std::string>() ==
               fnv1a_hex(env["payload"].get<std::string>());
    } catch (...) {
      ok = false;
    }
    if (!ok) {
      fs::remove(p);
      ++stats.removed;
    }
  }
  return stats;
}

}  // namespace ybh
