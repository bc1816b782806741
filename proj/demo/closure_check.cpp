// Compares the two closure criteria at a given n (default 4).
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "flagorbits/verify.hpp"

using namespace flagorbits;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  auto t0 = std::chrono::steady_clock::now();
  auto atlas = build_atlas(n);
  auto res = check_closure_equivalence(atlas);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0).count();
  std::cout << "n=" << n << " orbits=" << atlas.size() << " ordered pairs=" << res.cases
            << " " << (res.passed ? "agree" : "DISAGREE: " + res.counterexample) << " ("
            << ms << " ms)\n";
  return res.passed ? 0 : 1;
}
