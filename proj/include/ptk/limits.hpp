#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace ptk {

/// Size caps shared by the enumeration and lattice code.
///
/// `PARTITION_TOOLKIT_MAX_CELLS` overrides the relation-matrix cap
/// (elements squared) of materialized posets; `PARTITION_TOOLKIT_MAX_IDEALS`
/// overrides the down-set/up-set enumeration cap.
struct Limits {
  static constexpr int max_setpart_n = 12;
  static constexpr int max_intpart_n = 30;
  static constexpr int max_intpart_pairs_n = 20;
  static constexpr std::size_t default_max_ideals = 1'000'000;
  static constexpr std::size_t default_max_cells = 400'000'000;

  static std::size_t env_or(const char* name, std::size_t fallback) {
    if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
      try {
        return static_cast<std::size_t>(std::stoull(v));
      } catch (...) {
        return fallback;
      }
    }
    return fallback;
  }

  static std::size_t max_ideals() {
    return env_or("PARTITION_TOOLKIT_MAX_IDEALS", default_max_ideals);
  }

  static std::size_t max_cells() {
    return env_or("PARTITION_TOOLKIT_MAX_CELLS", default_max_cells);
  }
};

} // namespace ptk
