#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace coxcay {

// Caps that turn runaway instances into clean errors instead of hangs.
struct Limits {
  std::uint32_t max_weight = 64;         // largest accepted edge weight
  std::size_t max_orbit = 1'000'000;     // braid-orbit size per word
  std::size_t max_ball = 200'000;        // vertices per Cayley ball
  std::uint64_t max_nodes = 100'000'000; // backtracking nodes in the oracle
  std::size_t max_coset = 1'000'000;     // elements visited per coset search

  // Environment overrides, used by the CLI.
  static Limits from_env() {
    Limits lim;
    auto read = [](const char* name, auto& slot) {
      if (const char* s = std::getenv(name)) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) slot = static_cast<std::decay_t<decltype(slot)>>(v);
      }
    };
    read("COXCAY_MAX_ORBIT", lim.max_orbit);
    read("COXCAY_MAX_BALL", lim.max_ball);
    read("COXCAY_MAX_NODES", lim.max_nodes);
    return lim;
  }
};

}  // namespace coxcay
