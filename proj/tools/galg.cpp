// galg: graph algebras from the command line.
//
//   galg series <file> --algebra C|K|CT|KT|f:<file>|generic [--json]
//   galg check <file>
//   galg search --vertices V --edges E --mode forest|tree [--generic] [--seeds k]
//   galg tutte <file>
//   galg reconstruct <file> [--seed s]
//
// JSON goes to stdout; the human-readable summary goes to stderr unless
// --json is given.

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <string>

#include "galg/commands.hpp"
#include "galg/errors.hpp"

namespace {

struct Args {
  std::string file;
  std::string algebra;
  bool json_only = false;
  galg::SearchOptions search;
  std::string mode = "forest";
  std::size_t seed_count = 3;
  unsigned long shuffle_seed = 0;
};

int emit(const galg::CommandOutput& out, bool json_only) {
  std::cout << out.json.dump(2) << '\n';
  if (!json_only) std::cerr << out.summary;
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph algebras: Hilbert series, relation checks and reconstruction"};
  app.require_subcommand(1);
  Args args;
  app.add_flag("--json", args.json_only, "Print only JSON");

  auto* series = app.add_subcommand("series", "Hilbert series of a graph algebra");
  series->add_option("file", args.file, "Graph file")->required();
  series->add_option("--algebra", args.algebra, "C, K, CT, KT, generic or f:<polynomial file>")->required();
  series->add_flag("--json", args.json_only, "Print only JSON");

  auto* check = app.add_subcommand("check", "Verify relations, activity counts and reconstruction");
  check->add_option("file", args.file, "Graph file")->required();
  check->add_flag("--json", args.json_only, "Print only JSON");

  auto* search = app.add_subcommand("search", "Find Tutte-equivalent pairs separated by filtered series");
  search->add_option("--vertices", args.search.vertices, "Number of vertices")->required();
  search->add_option("--edges", args.search.edges, "Number of edges")->required();
  search->add_option("--mode", args.mode, "forest or tree")->check(CLI::IsMember({"forest", "tree"}));
  search->add_flag("--generic", args.search.generic, "Also compute generic series");
  search->add_option("--seeds", args.seed_count, "Number of generic sampling seeds");
  search->add_option("--vertex-bound", args.search.vertex_bound, "Largest allowed vertex count");
  search->add_option("--edge-bound", args.search.edge_bound, "Largest allowed edge count");
  search->add_option("--threads", args.search.threads, "Worker threads (0 = all cores)");
  search->add_flag("--json", args.json_only, "Print only JSON");

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a graph");
  tutte->add_option("file", args.file, "Graph file")->required();
  tutte->add_flag("--json", args.json_only, "Print only JSON");

  auto* rebuild = app.add_subcommand("reconstruct", "Round-trip a graph through its vertex generators");
  rebuild->add_option("file", args.file, "Graph file")->required();
  rebuild->add_option("--seed", args.shuffle_seed, "Shuffle the generator order (0 keeps it)");
  rebuild->add_flag("--json", args.json_only, "Print only JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? galg::kExitOk : galg::kExitUsage;
  }

  try {
    if (*series) return emit(galg::cmd_series(galg::read_graph_file(args.file), args.algebra), args.json_only);
    if (*check) return emit(galg::cmd_check(galg::read_graph_file(args.file)), args.json_only);
    if (*tutte) return emit(galg::cmd_tutte(galg::read_graph_file(args.file)), args.json_only);
    if (*rebuild) {
      return emit(galg::cmd_reconstruct(galg::read_graph_file(args.file), args.shuffle_seed), args.json_only);
    }
    if (*search) {
      args.search.mode = args.mode == "tree" ? galg::SearchMode::tree : galg::SearchMode::forest;
      args.search.seeds.resize(args.seed_count);
      std::iota(args.search.seeds.begin(), args.search.seeds.end(), 1);
      return emit(galg::cmd_search(args.search), args.json_only);
    }
  } catch (const std::exception& e) {
    std::cerr << "galg: " << e.what() << '\n';
    return galg::exit_code_for(e);
  }
  return galg::kExitUsage;
}
