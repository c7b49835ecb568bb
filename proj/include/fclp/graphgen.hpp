#ifndef FCLP_GRAPHGEN_HPP
#define FCLP_GRAPHGEN_HPP

#include <string>
#include <utility>
#include <vector>

#include "fclp/term.hpp"

namespace fclp {

// Undirected benchmark graphs; edges are emitted in one direction only
// (programs symmetrize them with a rule).
struct GraphInstance {
  std::string family;
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  unsigned long long seed = 0;
};

extern const std::vector<std::string> graph_families;

// Families: sparse-linear (a path), sparse-cycles (disjoint 3-cycles,
// the remainder folded into the last cycle), and random graphs with
// roughly n/2, n, 2n, and n^2/8 edges for verysparse/sparse/mid/dense.
// Deterministic per (family, size, seed). Throws Error on an unknown
// family.
GraphInstance gen_graph(const std::string& family, int size, unsigned long long seed);

// Renders `edge a b.` facts, plus `node a.` facts when requested.
std::string graph_facts(const GraphInstance& g, bool with_nodes);

}  // namespace fclp

#endif
