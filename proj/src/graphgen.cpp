#include "fclp/graphgen.hpp"

#include <random>
#include <set>
#include <sstream>

namespace fclp {

const std::vector<std::string> graph_families = {
    "sparse-linear",     "sparse-cycles", "verysparse-random",
    "sparse-random",     "mid-random",    "dense-random",
};

namespace {

std::vector<std::pair<int, int>> random_edges(int n, long long want,
                                              unsigned long long seed) {
  long long cap = static_cast<long long>(n) * (n - 1) / 2;
  if (want > cap) want = cap;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> pick(1, n);
  std::set<std::pair<int, int>> chosen;
  std::vector<std::pair<int, int>> out;
  while (static_cast<long long>(out.size()) < want) {
    int a = pick(rng);
    int b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (chosen.insert({a, b}).second) out.push_back({a, b});
  }
  return out;
}

}  // namespace

GraphInstance gen_graph(const std::string& family, int size, unsigned long long seed) {
  if (size < 1) throw Error("graph size must be at least 1");
  GraphInstance g;
  g.family = family;
  g.nodes = size;
  g.seed = seed;
  int n = size;
  if (family == "sparse-linear") {
    for (int i = 1; i < n; ++i) g.edges.push_back({i, i + 1});
  } else if (family == "sparse-cycles") {
    // full 3-cycles; a remainder of 1 or 2 nodes joins the final cycle
    int groups = n / 3;
    if (groups == 0) groups = 1;
    int start = 1;
    for (int gi = 0; gi < groups; ++gi) {
      int len = (gi == groups - 1) ? n - start + 1 : 3;
      for (int k = 0; k + 1 < len; ++k)
        g.edges.push_back({start + k, start + k + 1});
      if (len >= 3) g.edges.push_back({start + len - 1, start});
      start += len;
    }
  } else if (family == "verysparse-random") {
    g.edges = random_edges(n, n / 2, seed);
  } else if (family == "sparse-random") {
    g.edges = random_edges(n, n, seed);
  } else if (family == "mid-random") {
    g.edges = random_edges(n, 2LL * n, seed);
  } else if (family == "dense-random") {
    g.edges = random_edges(n, static_cast<long long>(n) * n / 8, seed);
  } else {
    throw Error("unknown graph family '" + family + "'");
  }
  return g;
}

std::string graph_facts(const GraphInstance& g, bool with_nodes) {
  std::ostringstream out;
  if (with_nodes)
    for (int i = 1; i <= g.nodes; ++i) out << "node " << i << ".\n";
  for (const auto& [a, b] : g.edges) out << "edge " << a << ' ' << b << ".\n";
  return out.str();
}

}  // namespace fclp
