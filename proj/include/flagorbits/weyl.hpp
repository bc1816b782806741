#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "flagorbits/permutation.hpp"

namespace flagorbits {

enum class Side { Left, Right };

/// A simple root acting on orbits: LeftK roots come from gl(n-1) and act on
/// the left (index 1..n-2); RightG roots come from gl(n) and act on the
/// right (index 1..n-1).
struct RootLabel {
  enum class Kind { LeftK, RightG };
  Kind side = Kind::RightG;
  int index = 1;

  friend bool operator==(const RootLabel&, const RootLabel&) = default;
  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;

  void check(int n) const {
    int hi = side == Kind::LeftK ? n - 2 : n - 1;
    if (index < 1 || index > hi)
      throw std::out_of_range(std::string(side == Kind::LeftK ? "left" : "right") +
                              " root index " + std::to_string(index) +
                              " out of range 1.." + std::to_string(hi));
  }

  std::string to_string() const {
    return std::string(side == Kind::LeftK ? "left:" : "right:") +
           std::to_string(index);
  }

  /// Parses "left:<i>" or "right:<i>".
  static RootLabel parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("root must look like left:<i> or right:<i>");
    auto side = text.substr(0, colon);
    RootLabel r;
    if (side == "left")
      r.side = Kind::LeftK;
    else if (side == "right")
      r.side = Kind::RightG;
    else
      throw std::invalid_argument("unknown root side '" + side + "'");
    try {
      std::size_t used = 0;
      r.index = std::stoi(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad root index in '" + text + "'");
    }
    return r;
  }
};

/// Every root of Pi_k followed by every root of Pi_g, in index order.
inline std::vector<RootLabel> all_roots(int n) {
  std::vector<RootLabel> out;
  for (int i = 1; i <= n - 2; ++i) out.push_back({RootLabel::Kind::LeftK, i});
  for (int i = 1; i <= n - 1; ++i) out.push_back({RootLabel::Kind::RightG, i});
  return out;
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  return p * q;
}

/// Number of inversions.
inline int length(const Permutation& w) {
  int n = w.degree(), inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

/// The n-cycle n -> n-1 -> ... -> 1 -> n.
inline Permutation sigma(int n) {
  Permutation::check_degree(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  w[0] = n;
  for (int i = 2; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i - 1;
  return Permutation(std::move(w));
}

/// Adjacent transposition s_i = (i, i+1).
inline Permutation simple_reflection(int i, int n) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("simple reflection index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(n - 1));
  auto w = Permutation::identity(n);
  std::vector<int> win(w.window().begin(), w.window().end());
  std::swap(win[static_cast<std::size_t>(i - 1)], win[static_cast<std::size_t>(i)]);
  return Permutation(std::move(win));
}

inline Permutation longest_element(int n) {
  Permutation::check_degree(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

/// sigma^-1 x sigma: carries (W,S*) data back to (W,S).
inline Permutation unstar(const Permutation& x) {
  auto s = sigma(x.degree());
  return s.inverse() * x * s;
}

/// sigma x sigma^-1.
inline Permutation to_star(const Permutation& x) {
  auto s = sigma(x.degree());
  return s * x * s.inverse();
}

/// Length with respect to S* = sigma S sigma^-1.
inline int star_length(const Permutation& u_star) {
  return length(unstar(u_star));
}

/// Bruhat order of (W,S) by rank-matrix dominance.
inline bool bruhat_leq(const Permutation& x, const Permutation& y) {
  Permutation::require_same_degree(x, y);
  const int n = x.degree();
  // diff[j] = #{a <= i : x(a) <= j} - #{a <= i : y(a) <= j}
  std::vector<int> diff(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = x(i); j <= n; ++j) ++diff[static_cast<std::size_t>(j)];
    for (int j = y(i); j <= n; ++j) --diff[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (diff[static_cast<std::size_t>(j)] < 0) return false;
  }
  return true;
}

/// Bruhat order of (W,S*).
inline bool star_bruhat_leq(const Permutation& x, const Permutation& y) {
  Permutation::require_same_degree(x, y);
  return bruhat_leq(unstar(x), unstar(y));
}

/// Classical monoid action of s_i on W: multiply when the length goes up.
inline Permutation monoid_w(int root_index, const Permutation& w, Side side) {
  auto s = simple_reflection(root_index, w.degree());
  auto moved = side == Side::Left ? s * w : w * s;
  return length(moved) > length(w) ? moved : w;
}

/// s_{alpha*} = sigma s_alpha sigma^-1; for index 1 this is (1,n) and for
/// index i >= 2 it is (i-1,i).
inline Permutation star_of_root(int index, int n) {
  return to_star(simple_reflection(index, n));
}

/// Lexicographically first reduced word (generator indices, left to right).
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  auto cur = w;
  const int n = w.degree();
  while (!cur.is_identity()) {
    for (int i = 1; i < n; ++i) {
      // s_i is a left descent iff i+1 appears before i in the window
      auto inv = cur.inverse();
      if (inv(i + 1) < inv(i)) {
        word.push_back(i);
        cur = simple_reflection(i, n) * cur;
        break;
      }
    }
  }
  return word;
}

/// Word rendering of an element. For n = 3 the generators are written s, t
/// (s = s_1, t = s_2), e.g. "st" is s*t; otherwise "s1s3s2". Identity is "e".
inline std::string word_string(const Permutation& w) {
  auto word = reduced_word(w);
  if (word.empty()) return "e";
  std::string out;
  for (int g : word) {
    if (w.degree() == 3)
      out.push_back(g == 1 ? 's' : 't');
    else
      out += "s" + std::to_string(g);
  }
  return out;
}

/// Inverse of word_string for n = 3 words over {s,t} (and "e").
inline Permutation parse_st_word(const std::string& word) {
  auto p = Permutation::identity(3);
  if (word == "e") return p;
  for (char c : word) {
    if (c == 's')
      p = p * simple_reflection(1, 3);
    else if (c == 't')
      p = p * simple_reflection(2, 3);
    else
      throw std::invalid_argument("bad s/t word '" + word + "'");
  }
  return p;
}

}  // namespace flagorbits
