#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagorbits/pairs.hpp"
#include "flagorbits/weyl.hpp"

namespace flagorbits {

/// Type of a simple root for an orbit. Real and complex-unstable roots are
/// not told apart at the level of pairs and share one value.
enum class RootType { ComplexStable, NonCompact, RealOrUnstable };

inline const char* to_string(RootType t) {
  switch (t) {
    case RootType::ComplexStable: return "ComplexStable";
    case RootType::NonCompact: return "NonCompact";
    case RootType::RealOrUnstable: return "RealOrUnstable";
  }
  return "?";
}

struct MoveRecord {
  ShareshianPair source;
  RootLabel root;
  ShareshianPair target;
  RootType root_type;

  bool productive() const { return root_type != RootType::RealOrUnstable; }
};

/// Restricted diagonal monoid action of one simple root on a pair, with the
/// root type read off the two length predicates.
inline MoveRecord act(const RootLabel& root, const ShareshianPair& pair) {
  const int n = pair.degree();
  root.check(n);
  const auto& w = pair.w();
  const auto& u = pair.u_star();

  Permutation w_moved, u_moved;
  if (root.side == RootLabel::Kind::LeftK) {
    // s_alpha for alpha in Pi_k is also the S*-generator s*_{i+1}
    auto s = simple_reflection(root.index, n);
    w_moved = s * w;
    u_moved = s * u;
  } else {
    w_moved = w * simple_reflection(root.index, n);
    u_moved = u * star_of_root(root.index, n);
  }
  const bool stable_w = length(w_moved) > length(w);
  const bool stable_u = star_length(u_moved) > star_length(u);

  RootType type = stable_w && stable_u   ? RootType::ComplexStable
                  : stable_w || stable_u ? RootType::NonCompact
                                         : RootType::RealOrUnstable;
  if (type == RootType::RealOrUnstable) return {pair, root, pair, type};
  return {pair, root,
          ShareshianPair(stable_w ? w_moved : w, stable_u ? u_moved : u), type};
}

/// (s_{n-1} ... s_i, s*_1 ... s*_{i-1}) for i = 1..n: the dimension-0 orbits.
inline std::vector<ShareshianPair> closed_orbits(int n) {
  Permutation::check_degree(n);
  std::vector<ShareshianPair> out;
  for (int i = 1; i <= n; ++i) {
    auto w = Permutation::identity(n);
    for (int j = n - 1; j >= i; --j) w = w * simple_reflection(j, n);
    auto u = Permutation::identity(n);
    for (int j = 1; j <= i - 1; ++j) u = u * star_of_root(j, n);
    out.emplace_back(w, u);
  }
  return out;
}

/// Result of closing the closed orbits under every root action. `depth`
/// is the BFS distance from the nearest closed orbit.
struct Generation {
  std::vector<ShareshianPair> pairs;  // discovery order
  std::unordered_map<ShareshianPair, int, ShareshianPairHash> depth;
};

inline Generation generate_from_closed(int n) {
  Generation gen;
  std::deque<ShareshianPair> frontier;
  for (auto& p : closed_orbits(n)) {
    if (gen.depth.emplace(p, 0).second) {
      gen.pairs.push_back(p);
      frontier.push_back(p);
    }
  }
  const auto roots = all_roots(n);
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop_front();
    const int d = gen.depth.at(cur);
    for (const auto& r : roots) {
      auto mv = act(r, cur);
      if (!mv.productive()) continue;
      if (gen.depth.emplace(mv.target, d + 1).second) {
        gen.pairs.push_back(mv.target);
        frontier.push_back(mv.target);
      }
    }
  }
  return gen;
}

/// NonCompact moves add one element to Delta; ComplexStable moves keep |Delta|.
inline bool check_delta_growth(const MoveRecord& mv) {
  const auto before = mv.source.delta().size();
  const auto after = mv.target.delta().size();
  switch (mv.root_type) {
    case RootType::NonCompact: return after == before + 1;
    case RootType::ComplexStable: return after == before;
    case RootType::RealOrUnstable: return true;
  }
  return false;
}

/// Every (root, pair) move for the given pairs, in pair order then root order.
inline std::vector<MoveRecord> all_moves(const std::vector<ShareshianPair>& pairs) {
  std::vector<MoveRecord> out;
  if (pairs.empty()) return out;
  const auto roots = all_roots(pairs.front().degree());
  out.reserve(pairs.size() * roots.size());
  for (const auto& p : pairs)
    for (const auto& r : roots) out.push_back(act(r, p));
  return out;
}

}  // namespace flagorbits
