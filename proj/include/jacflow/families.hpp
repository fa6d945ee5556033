#pragma once

#include <cstddef>

#include "jacflow/dartgraph.hpp"

// Named graphs used throughout the tests, the CLI and the verification suites.
namespace jacflow::families {

DartGraph path(std::size_t n);
DartGraph cycle(std::size_t n);  // vertex i joined to i + 1 mod n, edge i has dart 2i at i
DartGraph complete(std::size_t n);
DartGraph complete_bipartite(std::size_t a, std::size_t b);
DartGraph petersen();  // outer 0..4, inner 5..9, spokes i -- i + 5
DartGraph cube();      // Q3 on bit-strings 0..7
DartGraph theta(std::size_t multiplicity);
DartGraph semiedge_bouquet(std::size_t semiedges);

/// Central vertex 0 with three parallel edges to each of vertices 1 and 2.
DartGraph triple_star();

}  // namespace jacflow::families
