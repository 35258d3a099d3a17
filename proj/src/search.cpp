#include "galg/search.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "galg/errors.hpp"
#include "galg/generators.hpp"
#include "galg/isomorphism.hpp"
#include "galg/squarefree.hpp"

namespace galg {

namespace {

void validate(const SearchOptions& o) {
  if (o.vertices < 1 || o.edges < 0) throw InvalidInput("search needs at least one vertex");
  if (o.vertices > o.vertex_bound) {
    throw BoundExceeded("search is limited to " + std::to_string(o.vertex_bound) + " vertices");
  }
  if (o.edges > o.edge_bound) {
    throw BoundExceeded("search is limited to " + std::to_string(o.edge_bound) + " edges");
  }
  if (o.generic && o.seeds.size() < 2) throw InvalidInput("generic series needs at least two seeds");
}

TuttePolynomial group_key(const Multigraph& g, SearchMode mode) {
  return mode == SearchMode::forest ? tutte(g) : tutte(delta_subgraph(g).graph);
}

void compute_series(GraphSeries& gs, const SearchOptions& o) {
  const AmbientPtr amb = Ambient::make(o.mode == SearchMode::forest ? AmbientKind::full : AmbientKind::tree, gs.graph);
  gs.graded = graded_series(x_generators(amb)).series;
  gs.filtered = filtered_series(y_generators(amb)).series;
  if (o.generic) {
    const SeriesResult r = generic_series(amb, o.seeds);
    gs.generic = r.series;
    gs.generic_consensus = r.consensus;
  }
}

// Runs `work(i)` for i in [0, n) on a small thread pool; the first exception
// is rethrown after all workers finish.
template <class Work>
void parallel_for(std::size_t n, unsigned threads, Work work) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SearchResult run_search(const SearchOptions& options) {
  validate(options);
  SearchResult result;
  result.options = options;
  const auto all = enumerate_multigraphs(options.vertices, options.edges, options.mode == SearchMode::tree);
  result.graphs_enumerated = all.size();

  std::vector<TuttePolynomial> keys(all.size());
  parallel_for(all.size(), options.threads, [&](std::size_t i) { keys[i] = group_key(all[i], options.mode); });

  // Group members in enumeration order; groups ordered by first member.
  std::map<TuttePolynomial, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < all.size(); ++i) by_key[keys[i]].push_back(i);
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [key, members] : by_key) {
    if (members.size() >= 2) groups.push_back(members);
  }
  std::sort(groups.begin(), groups.end());
  result.shared_groups = groups.size();

  std::vector<std::vector<std::size_t>> local(groups.size());
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (std::size_t i : groups[gi]) {
      local[gi].push_back(result.graphs.size());
      result.graphs.push_back(GraphSeries{all[i], keys[i], {}, {}, std::nullopt, std::nullopt});
    }
  }
  parallel_for(result.graphs.size(), options.threads,
               [&](std::size_t i) { compute_series(result.graphs[i], options); });

  for (const auto& members : local) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const GraphSeries& a = result.graphs[members[x]];
        const GraphSeries& b = result.graphs[members[y]];
        if (a.graded != b.graded || a.filtered == b.filtered) continue;
        if (are_isomorphic(a.graph, b.graph)) {
          throw Error("search produced two isomorphic canonical forms");
        }
        SearchPair pair{members[x], members[y], {}};
        const auto named = pair_series(result, pair);
        for (std::size_t i = 0; i < named.size(); ++i) {
          for (std::size_t j = i + 1; j < named.size(); ++j) {
            pair.relations.push_back(
                {named[i].first, named[j].first, majorize(named[i].second, named[j].second)});
          }
        }
        result.pairs.push_back(std::move(pair));
      }
    }
  }
  return result;
}

std::vector<std::pair<std::string, HilbertSeries>> pair_series(const SearchResult& result,
                                                               const SearchPair& pair) {
  const GraphSeries& a = result.graphs.at(pair.first);
  const GraphSeries& b = result.graphs.at(pair.second);
  std::vector<std::pair<std::string, HilbertSeries>> out{
      {"graded", a.graded}, {"filtered_a", a.filtered}, {"filtered_b", b.filtered}};
  if (a.generic && b.generic) {
    out.emplace_back("generic_a", *a.generic);
    out.emplace_back("generic_b", *b.generic);
  }
  return out;
}

}  // namespace galg
