#ifndef GALG_COMMANDS_HPP
#define GALG_COMMANDS_HPP

#include <exception>
#include <string>

#include <json.hpp>

#include "galg/hilbert.hpp"
#include "galg/multigraph.hpp"
#include "galg/relations.hpp"
#include "galg/search.hpp"

namespace galg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBound = 3;

struct CommandOutput {
  nlohmann::json json;
  int exit_code = kExitOk;
  /// Human-readable summary (printed to stderr by the CLI).
  std::string summary;
};

/// `algebra` is one of C, K, CT, KT, generic, or f:<polynomial file>.
CommandOutput cmd_series(const Multigraph& g, const std::string& algebra);
CommandOutput cmd_check(const Multigraph& g);
CommandOutput cmd_search(const SearchOptions& options);
CommandOutput cmd_tutte(const Multigraph& g);
/// Rebuilds g from its Y~ generators, taken in an order shuffled by `seed`
/// (seed 0 keeps the vertex order).
CommandOutput cmd_reconstruct(const Multigraph& g, unsigned long seed = 0);

/// Maps library exceptions to CLI exit codes.
int exit_code_for(const std::exception& e);

nlohmann::json to_json(const Multigraph& g);
nlohmann::json to_json(const SeriesResult& r);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const SearchResult& r);

}  // namespace galg

#endif  // GALG_COMMANDS_HPP
