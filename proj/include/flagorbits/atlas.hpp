#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "flagorbits/flags.hpp"
#include "flagorbits/monoid.hpp"
#include "flagorbits/pairs.hpp"

namespace flagorbits {

/// One orbit under all of its labels.
struct OrbitRecord {
  int id = 0;
  ShareshianPair pair;
  StandardizedPair standardized;
  DecoratedPermutation decorated;
  StandardFlag flag;
  int dim = 0;
};

/// Which cross-label checks build_atlas performs on every record.
enum class AtlasCheck {
  Labels,  ///< bijection round trips between pair, decorated, standardized and flag
  Full,    ///< Labels plus stabilizer_dim(flag) == dim
};

/// One record per orbit in enumerate_pairs order; ids are positions.
inline std::vector<OrbitRecord> build_atlas(int n, AtlasCheck check = AtlasCheck::Labels) {
  std::vector<OrbitRecord> out;
  int id = 0;
  for (const auto& pair : enumerate_pairs(n)) {
    auto flag = pair_to_flag(pair);
    auto dec = pair_to_decorated(pair);
    auto std_pair = standardize(pair);
    if (!(flag_to_pair(flag) == pair) || !(decorated_to_pair(dec) == pair) ||
        !(destandardize(std_pair) == pair))
      throw std::logic_error("label round trip failed for " + pair.to_string());
    const int dim = dim_of_pair(pair);
    if (check == AtlasCheck::Full && stabilizer_dim(flag) != dim)
      throw std::logic_error("stabilizer dimension disagrees for " + pair.to_string());
    out.push_back(OrbitRecord{id++, pair, std_pair, dec, flag, dim});
  }
  return out;
}

/// Root and type of a move realizing a cover.
struct CoverMove {
  RootLabel root;
  RootType type;
  friend bool operator==(const CoverMove&, const CoverMove&) = default;
};

struct HasseEdge {
  int lower = 0;
  int upper = 0;
  std::vector<CoverMove> moves;  // empty for covers no monoid move realizes
};

/// Dense bit rows: row a holds the set {b : a <= b}.
class BitRelation {
public:
  BitRelation() = default;
  explicit BitRelation(std::size_t size)
      : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t a, std::size_t b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  void set(std::size_t a, std::size_t b) { bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
  std::uint64_t* row(std::size_t a) { return bits_.data() + a * words_; }
  const std::uint64_t* row(std::size_t a) const { return bits_.data() + a * words_; }
  std::size_t words() const { return words_; }

private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct OrbitPoset {
  int n = 0;
  std::vector<OrbitRecord> orbits;
  BitRelation leq;  // closure order, reflexive
  std::vector<HasseEdge> covers;  // sorted by (lower, upper)

  bool less_equal(int a, int b) const {
    return leq.test(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
};

namespace detail {

/// Rank-matrix entries #{a <= i : x(a) <= j}, i, j = 1..n-1, flattened.
inline std::vector<std::uint8_t> dominance_key(const Permutation& x) {
  const int n = x.degree();
  std::vector<std::uint8_t> key;
  key.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = x(i); j <= n; ++j) ++count[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n - 1; ++j) key.push_back(static_cast<std::uint8_t>(count[static_cast<std::size_t>(j)]));
  }
  return key;
}

template <class Fn>
void parallel_rows(std::size_t rows, Fn&& fn) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (rows < 256) workers = 1;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t a = t; a < rows; a += workers) fn(a);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Full closure order, its transitive reduction, and the monoid moves that
/// realize each cover.
inline OrbitPoset build_poset(int n, AtlasCheck check = AtlasCheck::Labels) {
  OrbitPoset poset;
  poset.n = n;
  poset.orbits = build_atlas(n, check);
  const std::size_t count = poset.orbits.size();

  // x <= y in Bruhat order iff every dominance entry of x is >= that of y;
  // both coordinates are concatenated into one key per orbit.
  std::vector<std::vector<std::uint8_t>> keys(count);
  for (std::size_t a = 0; a < count; ++a) {
    keys[a] = detail::dominance_key(poset.orbits[a].pair.w());
    auto ku = detail::dominance_key(poset.orbits[a].standardized.u);
    keys[a].insert(keys[a].end(), ku.begin(), ku.end());
  }
  poset.leq = BitRelation(count);
  // Rows are disjoint word ranges, so workers never share a word.
  detail::parallel_rows(count, [&](std::size_t a) {
    const auto& ka = keys[a];
    for (std::size_t b = 0; b < count; ++b) {
      const auto& kb = keys[b];
      bool ok = true;
      for (std::size_t k = 0; k < ka.size(); ++k)
        if (ka[k] < kb[k]) {
          ok = false;
          break;
        }
      if (ok) poset.leq.set(a, b);
    }
  });

  // covers(a) = strict upset(a) minus the strict upsets of its members
  std::unordered_map<ShareshianPair, int, ShareshianPairHash> index;
  for (const auto& rec : poset.orbits) index.emplace(rec.pair, rec.id);
  const std::size_t words = poset.leq.words();
  for (std::size_t a = 0; a < count; ++a) {
    std::vector<std::uint64_t> strict(poset.leq.row(a), poset.leq.row(a) + words);
    strict[a / 64] &= ~(std::uint64_t{1} << (a % 64));
    std::vector<std::uint64_t> cov = strict;
    for (std::size_t c = 0; c < count; ++c) {
      if (!((strict[c / 64] >> (c % 64)) & 1u)) continue;
      const auto* rc = poset.leq.row(c);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t up = rc[w];
        if (w == c / 64) up &= ~(std::uint64_t{1} << (c % 64));
        cov[w] &= ~up;
      }
    }
    std::map<int, std::vector<CoverMove>> moves;
    for (const auto& r : all_roots(n)) {
      auto mv = act(r, poset.orbits[a].pair);
      if (!mv.productive()) continue;
      moves[index.at(mv.target)].push_back({r, mv.root_type});
    }
    for (std::size_t b = 0; b < count; ++b)
      if ((cov[b / 64] >> (b % 64)) & 1u) {
        HasseEdge e{static_cast<int>(a), static_cast<int>(b), {}};
        if (auto it = moves.find(static_cast<int>(b)); it != moves.end()) e.moves = it->second;
        poset.covers.push_back(std::move(e));
      }
  }
  return poset;
}

/// Drawing attributes of a cover: color by root type (green when no move
/// realizes it), dashed only when every realizing move is a left move.
struct EdgeStyle {
  std::string color;  // "blue", "red" or "green"
  bool dashed = false;
  friend bool operator==(const EdgeStyle&, const EdgeStyle&) = default;
};

inline EdgeStyle classify_edge(const HasseEdge& e) {
  if (e.moves.empty()) return {"green", false};
  const CoverMove* pick = nullptr;
  for (const auto& m : e.moves)
    if (m.root.side == RootLabel::Kind::RightG) {
      pick = &m;
      break;
    }
  const bool dashed = pick == nullptr;
  if (!pick) pick = &e.moves.front();
  return {pick->type == RootType::ComplexStable ? "blue" : "red", dashed};
}

inline std::string orbit_label(const OrbitRecord& rec) {
  if (rec.pair.degree() == 3) return rec.standardized.to_words();
  return "(" + rec.standardized.w.to_string() + " | " + rec.standardized.u.to_string() + ")";
}

inline std::string export_dot(const OrbitPoset& poset) {
  std::ostringstream os;
  os << "digraph orbits {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box];\n";
  std::map<int, std::vector<int>> levels;
  for (const auto& rec : poset.orbits) levels[rec.dim].push_back(rec.id);
  for (const auto& [dim, ids] : levels) {
    os << "  { rank=same;";
    for (int id : ids) os << " o" << id << ";";
    os << " }  // dim " << dim << "\n";
  }
  for (const auto& rec : poset.orbits)
    os << "  o" << rec.id << " [label=\"" << orbit_label(rec) << "\", dim=" << rec.dim
       << "];\n";
  for (const auto& e : poset.covers) {
    auto style = classify_edge(e);
    os << "  o" << e.lower << " -> o" << e.upper << " [color=" << style.color
       << ", style=" << (style.dashed ? "dashed" : "solid");
    if (!e.moves.empty()) {
      os << ", label=\"";
      for (std::size_t k = 0; k < e.moves.size(); ++k)
        os << (k ? " " : "") << e.moves[k].root.to_string();
      os << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace detail {
inline std::vector<int> window_vec(const Permutation& p) {
  return {p.window().begin(), p.window().end()};
}
inline const char* side_name(RootLabel::Kind k) {
  return k == RootLabel::Kind::LeftK ? "left" : "right";
}
}  // namespace detail

inline std::string export_json(const OrbitPoset& poset) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = poset.n;
  doc["orbits"] = ordered_json::array();
  for (const auto& rec : poset.orbits) {
    ordered_json o;
    o["id"] = rec.id;
    o["w"] = detail::window_vec(rec.pair.w());
    o["ustar"] = detail::window_vec(rec.pair.u_star());
    o["u"] = detail::window_vec(rec.standardized.u);
    o["delta"] = rec.pair.delta().elements();
    o["dim"] = rec.dim;
    o["flag"] = rec.flag.to_string();
    doc["orbits"].push_back(std::move(o));
  }
  doc["covers"] = ordered_json::array();
  for (const auto& e : poset.covers) {
    ordered_json c;
    c["lower"] = e.lower;
    c["upper"] = e.upper;
    c["moves"] = ordered_json::array();
    for (const auto& m : e.moves)
      c["moves"].push_back({{"side", detail::side_name(m.root.side)},
                            {"index", m.root.index},
                            {"type", to_string(m.type)}});
    doc["covers"].push_back(std::move(c));
  }
  return doc.dump(2) + "\n";
}

/// Rank profile as {"r","rstar","delta","rbar"}, each an (n+1)x(n+1) matrix.
inline std::string export_profile_json(const RankProfile& prof) {
  using nlohmann::ordered_json;
  auto matrix = [](const RankTable& t) {
    ordered_json m = ordered_json::array();
    for (int p = 0; p < t.size(); ++p) {
      std::vector<int> row;
      for (int q = 0; q < t.size(); ++q) row.push_back(t(p, q));
      m.push_back(row);
    }
    return m;
  };
  ordered_json doc;
  doc["r"] = matrix(prof.r);
  doc["rstar"] = matrix(prof.r_star);
  doc["delta"] = matrix(prof.delta);
  doc["rbar"] = matrix(prof.r_bar);
  return doc.dump() + "\n";
}

/// One JSON object per line: {source, root: {side, index}, type, target}.
inline std::string export_move_log(const std::vector<MoveRecord>& moves) {
  using nlohmann::ordered_json;
  std::string out;
  for (const auto& mv : moves) {
    ordered_json j;
    j["source"] = mv.source.to_string();
    j["root"] = {{"side", detail::side_name(mv.root.side)}, {"index", mv.root.index}};
    j["type"] = to_string(mv.root_type);
    j["target"] = mv.target.to_string();
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace flagorbits
