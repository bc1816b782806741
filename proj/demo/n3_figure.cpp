// Prints the n=3 Hasse diagram row by row, then as DOT.
#include <iostream>
#include <map>

#include "flagorbits/atlas.hpp"

using namespace flagorbits;

int main() {
  auto poset = build_poset(3);
  std::map<int, std::vector<const OrbitRecord*>> rows;
  for (const auto& rec : poset.orbits) rows[rec.dim].push_back(&rec);
  for (const auto& [dim, recs] : rows) {
    std::cout << "dim " << dim << ":";
    for (const auto* rec : recs) std::cout << "  " << rec->standardized.to_words();
    std::cout << "\n";
  }
  std::cout << "\n";
  for (const auto& e : poset.covers) {
    auto style = classify_edge(e);
    std::cout << poset.orbits[e.lower].standardized.to_words() << " -> "
              << poset.orbits[e.upper].standardized.to_words() << "  " << style.color
              << (style.dashed ? " dashed" : " solid") << "\n";
  }
  std::cout << "\n" << export_dot(poset);
}
