#pragma once

#include <optional>
#include <string>

#include "wzw/weights.hpp"

namespace wzw {

/// Directory for persisted weight systems. Empty string disables the disk
/// cache. Defaults to $WZW_CACHE_DIR when set.
void set_cache_dir(const std::string& dir);
std::string cache_dir();

/// Content hash of the root-system constants; part of every cache key so
/// stale files from a convention change can never be loaded.
std::string cartan_fingerprint(const RootData& rd);

std::optional<WeightSystem> load_cached_weight_system(const RootData& rd, const Weight& hw);
void store_cached_weight_system(const RootData& rd, const WeightSystem& ws);

}  // namespace wzw
