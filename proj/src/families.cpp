#include "jacflow/families.hpp"

namespace jacflow::families {

DartGraph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

DartGraph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return b.build();
}

DartGraph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

DartGraph complete_bipartite(std::size_t a, std::size_t c) {
  GraphBuilder b(a + c);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < c; ++j) b.add_edge(i, static_cast<Vertex>(a + j));
  return b.build();
}

DartGraph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return b.build();
}

DartGraph cube() {
  GraphBuilder b(8);
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex bit = 1; bit < 8; bit <<= 1)
      if ((v & bit) == 0) b.add_edge(v, v | bit);
  return b.build();
}

DartGraph theta(std::size_t multiplicity) {
  GraphBuilder b(2);
  for (std::size_t i = 0; i < multiplicity; ++i) b.add_edge(0, 1);
  return b.build();
}

DartGraph semiedge_bouquet(std::size_t semiedges) {
  GraphBuilder b(1);
  for (std::size_t i = 0; i < semiedges; ++i) b.add_semiedge(0);
  return b.build();
}

DartGraph triple_star() {
  GraphBuilder b(3);
  for (int i = 0; i < 3; ++i) b.add_edge(0, 1);
  for (int i = 0; i < 3; ++i) b.add_edge(0, 2);
  return b.build();
}

}  // namespace jacflow::families
