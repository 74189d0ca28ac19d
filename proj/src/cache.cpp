#include "depthlab/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace fs = std::filesystem;
using nlohmann::json;

std::string default_cache_dir() {
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  return ".depthlab-cache";
}

std::string canonical_group_hash(const FiniteGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(g.degree()));
  mix(g.size());
  for (const auto& p : g.elements()) {
    for (int v : p.images()) mix(static_cast<std::uint64_t>(v));
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

fs::path entry_path(const std::string& cache_dir, const FiniteGroup& g, std::uint64_t p) {
  return fs::path(cache_dir) / ("g" + canonical_group_hash(g) + "-p" + std::to_string(p) + ".json");
}

bool load_entry(const fs::path& path, const FiniteGroup& g, const ConjugacyData& classes,
                const PrimeContext& context, CharTableModP* out) {
  std::ifstream in(path);
  if (!in) return false;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    return false;
  }
  if (!j.is_object()) return false;
  try {
    if (j.at("order").get<std::uint64_t>() != g.size()) return false;
    if (j.at("exponent").get<std::uint64_t>() != context.exponent) return false;
    if (j.at("p").get<std::uint64_t>() != context.p) return false;
    if (j.at("omega").get<std::uint64_t>() != context.omega) return false;
    const auto sizes = j.at("class_sizes").get<std::vector<std::uint64_t>>();
    if (sizes != classes.class_sizes) return false;
    CharTableModP table;
    table.context = context;
    table.group_order = g.size();
    table.classes = classes;
    table.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
    table.values = j.at("values").get<std::vector<std::vector<std::uint64_t>>>();
    if (table.degrees.size() != classes.count() || table.values.size() != classes.count()) {
      return false;
    }
    for (const auto& row : table.values) {
      if (row.size() != classes.count()) return false;
    }
    if (!verify_table(table)) return false;
    *out = std::move(table);
    return true;
  } catch (const json::exception&) {
    return false;
  }
}

void store_entry(const fs::path& path, const CharTableModP& table) {
  json j;
  j["order"] = table.group_order;
  j["exponent"] = table.context.exponent;
  j["p"] = table.context.p;
  j["omega"] = table.context.omega;
  j["class_sizes"] = table.classes.class_sizes;
  j["degrees"] = table.degrees;
  j["values"] = table.values;

  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.parent_path() /
                       (path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best-effort; computation already succeeded
    out << j.dump(2) << "\n";
  }
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace

CharTableModP dixon_table_cached(const FiniteGroup& g, const ConjugacyData& classes,
                                 const PrimeContext& context, const std::string& cache_dir) {
  if (cache_dir.empty()) return dixon_table(g, classes, context);
  const fs::path path = entry_path(cache_dir, g, context.p);
  CharTableModP table;
  if (load_entry(path, g, classes, context, &table)) return table;
  table = dixon_table(g, classes, context);
  store_entry(path, table);
  return table;
}

CacheStats cache_stats(const std::string& cache_dir) {
  CacheStats stats;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(cache_dir, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    ++stats.files;
    stats.bytes += entry.file_size();
  }
  return stats;
}

std::uint64_t cache_clear(const std::string& cache_dir) {
  std::uint64_t removed = 0;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(cache_dir, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::error_code rec;
    if (fs::remove(entry.path(), rec)) ++removed;
  }
  return removed;
}

}  // namespace depthlab
