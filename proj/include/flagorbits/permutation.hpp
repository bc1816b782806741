#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagorbits {

/// Element of the symmetric group S_n in one-line notation.
///
/// Points are 1-based: `(*this)(i)` is the image of i for 1 <= i <= n.
/// The degree is fixed at construction and must be at least 2.
/// Composition follows the apply-right-first convention, so
/// `(p * q)(x) == p(q(x))`.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> window) : window_(std::move(window)) {
    validate();
  }

  Permutation(std::initializer_list<int> window)
      : window_(window.begin(), window.end()) {
    validate();
  }

  static Permutation identity(int n) {
    check_degree(n);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), unchecked{});
  }

  /// Builds a permutation from disjoint cycles; each listed point maps to
  /// the next one and the last point of a cycle maps to the first.
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles) {
    check_degree(n);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        int a = c[k];
        if (a < 1 || a > n)
          throw std::invalid_argument("cycle point " + std::to_string(a) +
                                      " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(a)])
          throw std::invalid_argument("cycles are not disjoint at point " +
                                      std::to_string(a));
        seen[static_cast<std::size_t>(a)] = true;
        w[static_cast<std::size_t>(a - 1)] = c[(k + 1) % c.size()];
      }
    }
    return Permutation(std::move(w), unchecked{});
  }

  /// Parses "3,1,2" (one-line) or "(3,2,1)(4,5)" (cycles). Cycle syntax
  /// needs the degree; "()" denotes the identity.
  static Permutation parse(std::string_view text, int n) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty permutation text");

    if (s.front() == '(') {
      std::vector<std::vector<int>> cycles;
      std::size_t pos = 0;
      while (pos < s.size()) {
        if (s[pos] != '(')
          throw std::invalid_argument("malformed cycle syntax: " + s);
        auto close = s.find(')', pos);
        if (close == std::string::npos)
          throw std::invalid_argument("unterminated cycle: " + s);
        auto body = s.substr(pos + 1, close - pos - 1);
        if (!body.empty()) cycles.push_back(parse_ints(body));
        pos = close + 1;
      }
      return from_cycles(n, cycles);
    }
    Permutation p(parse_ints(s));
    if (n > 0 && p.degree() != n)
      throw std::invalid_argument("expected degree " + std::to_string(n) +
                                  ", got " + std::to_string(p.degree()) +
                                  " in '" + s + "'");
    return p;
  }

  int degree() const { return static_cast<int>(window_.size()); }

  int operator()(int x) const {
    return window_[static_cast<std::size_t>(x - 1)];
  }

  std::span<const int> window() const { return window_; }

  Permutation inverse() const {
    std::vector<int> inv(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i)
      inv[static_cast<std::size_t>(window_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv), unchecked{});
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < window_.size(); ++i)
      if (window_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// Order of the element in the group (lcm of cycle lengths).
  long long order() const {
    long long result = 1;
    std::vector<bool> seen(window_.size(), false);
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(window_[j] - 1)) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    require_same_degree(p, q);
    std::vector<int> r(q.window_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p(q.window_[i]);
    return Permutation(std::move(r), unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Canonical serialization: comma-separated one-line window.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(window_[i]);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << '[' << p.to_string() << ']';
  }

  static void require_same_degree(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("degree mismatch: " +
                                  std::to_string(p.degree()) + " vs " +
                                  std::to_string(q.degree()));
  }

  static void check_degree(int n) {
    if (n < 2)
      throw std::invalid_argument("degree must be at least 2, got " +
                                  std::to_string(n));
  }

private:
  struct unchecked {};
  Permutation(std::vector<int> w, unchecked) : window_(std::move(w)) {}

  void validate() const {
    check_degree(degree());
    std::vector<bool> seen(window_.size() + 1, false);
    for (int v : window_) {
      if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation of 1.." +
                                    std::to_string(degree()) + ": " +
                                    to_string());
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty entry in '" + s + "'");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + tok + "'");
      }
      if (used != tok.size())
        throw std::invalid_argument("not an integer: '" + tok + "'");
      out.push_back(v);
    }
    return out;
  }

  std::vector<int> window_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.window()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

/// All permutations of degree n in lexicographic order of their windows.
inline std::vector<Permutation> all_permutations(int n) {
  Permutation::check_degree(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace flagorbits
