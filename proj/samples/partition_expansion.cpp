// Demonstrates the partition-lattice expansion: the partition function of a
// path on three vertices reassembled from the connected polynomials of the
// blocks of each vertex partition.

#include <iostream>

#include "tutte/tutte.hpp"

using namespace tutte;

int main() {
  MultiGraph path({"a", "b", "c"});
  path.add_edge(0, 1);
  path.add_edge(1, 2);

  Variable q("q");
  MultiPoly direct = z_subset(path).value;
  std::cout << "direct:    " << direct.str() << "\n";

  MultiPoly assembled;
  for (const auto& pi : enumerate_partitions(path.vertex_ids())) {
    MultiPoly term = MultiPoly::var(q, pi.block_count());
    for (const auto& block : pi.blocks()) {
      unsigned mask = 0;
      for (int v : block) mask |= 1u << v;
      term *= connected_poly(path.induced(mask));
    }
    std::cout << "  " << pi.str() << ": " << term.str() << "\n";
    assembled += term;
  }
  std::cout << "assembled: " << assembled.str() << "\n";
  std::cout << (assembled == direct ? "equal" : "DIFFERENT") << "\n";
  return assembled == direct ? 0 : 1;
}
