#include "wzw/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include <json.hpp>

namespace wzw {

namespace {

constexpr int kFormatVersion = 1;

std::mutex g_mu;
std::string g_dir = [] {
  const char* env = std::getenv("WZW_CACHE_DIR");
  return env ? std::string(env) : std::string();
}();

std::string key_path(const RootData& rd, const Weight& hw, const std::string& dir) {
  std::string name = rd.name() + "_" + cartan_fingerprint(rd);
  for (int x : hw) name += "_" + std::to_string(x);
  return dir + "/" + name + ".json";
}

}  // namespace

void set_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(g_mu);
  g_dir = dir;
}

std::string cache_dir() {
  std::lock_guard<std::mutex> lock(g_mu);
  return g_dir;
}

std::string cartan_fingerprint(const RootData& rd) {
  // FNV-1a over the Cartan matrix and root lengths
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&](long long v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<unsigned char>(v >> (8 * b));
      h *= 1099511628211ull;
    }
  };
  mix(rd.rank);
  for (const auto& row : rd.cartan)
    for (int x : row) mix(x);
  for (const auto& d : rd.half_len2) {
    mix(d.numerator());
    mix(d.denominator());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::optional<WeightSystem> load_cached_weight_system(const RootData& rd, const Weight& hw) {
  std::string dir = cache_dir();
  if (dir.empty()) return std::nullopt;
  std::ifstream in(key_path(rd, hw, dir));
  if (!in.good()) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kFormatVersion) return std::nullopt;
    if (j.at("algebra").get<std::string>() != rd.name()) return std::nullopt;
    if (j.at("hw").get<Weight>() != hw) return std::nullopt;
    WeightSystem ws;
    ws.hw = hw;
    for (const auto& entry : j.at("dominant")) {
      Weight w = entry.at(0).get<Weight>();
      long long m = entry.at(1).get<long long>();
      if (static_cast<int>(w.size()) != rd.rank || m <= 0) return std::nullopt;
      ws.dominant_mults[std::move(w)] = m;
    }
    return ws;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void store_cached_weight_system(const RootData& rd, const WeightSystem& ws) {
  std::string dir = cache_dir();
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  nlohmann::json j;
  j["version"] = kFormatVersion;
  j["algebra"] = rd.name();
  j["hw"] = ws.hw;
  auto dom = nlohmann::json::array();
  for (const auto& [w, m] : ws.dominant_mults) dom.push_back({w, m});
  j["dominant"] = std::move(dom);

  std::string final_path = key_path(rd, ws.hw, dir);
  std::string tmp_path = final_path + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path);
    if (!out.good()) return;
    out << j;
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace wzw
