#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace unref {

/// jobs <= 0 means "pick a default": UNREF_JOBS if set, otherwise the hardware
/// concurrency, clamped to [1, 64].
inline int resolve_jobs(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("UNREF_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp<int>(static_cast<int>(hw), 1, 64);
}

}  // namespace unref
