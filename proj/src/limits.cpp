#include "galg/limits.hpp"

#include <cstdlib>
#include <string>

#include "galg/errors.hpp"

namespace galg {

std::size_t rank_edge_bound() {
  if (const char* env = std::getenv("GALG_MAX_EDGES")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v < 63 ? v : 63);
  }
  return kDefaultRankEdges;
}

void require_rank_bound(std::size_t edges) {
  if (edges > rank_edge_bound()) {
    throw BoundExceeded("graph has " + std::to_string(edges) +
                        " edges; rank computations are limited to " +
                        std::to_string(rank_edge_bound()) + " (set GALG_MAX_EDGES)");
  }
}

}  // namespace galg
