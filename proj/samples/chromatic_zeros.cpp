// Prints the coloring polynomial of a cycle and evaluates it at small
// integers: C_n admits q(q-1)^(n-1) proper colorings up to the alternating
// correction term.

#include <iostream>

#include "tutte/tutte.hpp"

using namespace tutte;

int main() {
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::string> ids;
    for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    MultiGraph cycle(std::move(ids));
    for (int i = 0; i < n; ++i) cycle.add_edge(i, (i + 1) % n);
    MultiPoly p = chromatic(cycle);
    std::cout << "cycle on " << n << ": " << p.str() << "\n";
    Variable q("q");
    for (long k = 2; k <= 4; ++k) {
      Rational count = p.eval({{q, make_rational(k)}});
      std::cout << "  " << k << " colors: " << rational_str(count) << "\n";
    }
  }
  return 0;
}
