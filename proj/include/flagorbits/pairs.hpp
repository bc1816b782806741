#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagorbits/permutation.hpp"
#include "flagorbits/weyl.hpp"

namespace flagorbits {

/// Associated decreasing sequence: {j_1 < ... < j_k < n} together with n.
class Delta {
public:
  Delta() = default;

  Delta(int n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
    Permutation::check_degree(n);
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
      throw std::invalid_argument("Delta has repeated elements");
    if (elems_.empty() || elems_.back() != n)
      throw std::invalid_argument("Delta must contain n = " + std::to_string(n));
    if (elems_.front() < 1)
      throw std::invalid_argument("Delta elements must lie in 1..n");
  }

  static Delta singleton(int n) { return Delta(n, {n}); }

  int degree() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<int>& elements() const { return elems_; }

  /// (n, j_k, ..., j_1): the elements from n downward.
  std::vector<int> descending() const {
    return {elems_.rbegin(), elems_.rend()};
  }

  bool contains(int j) const {
    return std::binary_search(elems_.begin(), elems_.end(), j);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(elems_[i]);
    }
    return out;
  }

  friend bool operator==(const Delta&, const Delta&) = default;
  friend auto operator<=>(const Delta&, const Delta&) = default;

private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// The cycle n -> j_k -> ... -> j_1 -> n (identity when Delta = {n}).
inline Permutation tau_of_delta(const Delta& delta) {
  const int n = delta.degree();
  auto seq = delta.descending();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i;
  if (seq.size() > 1)
    for (std::size_t k = 0; k < seq.size(); ++k)
      w[static_cast<std::size_t>(seq[k] - 1)] = seq[(k + 1) % seq.size()];
  return Permutation(std::move(w));
}

/// w^-1(n) < w^-1(j_k) < ... < w^-1(j_1).
inline bool is_decreasing_for_inverse(const Permutation& w, const Delta& delta) {
  if (w.degree() != delta.degree()) return false;
  auto inv = w.inverse();
  auto seq = delta.descending();
  for (std::size_t k = 0; k + 1 < seq.size(); ++k)
    if (inv(seq[k]) >= inv(seq[k + 1])) return false;
  return true;
}

/// Reads Delta off the cycle y sigma w^-1 and checks both pair conditions.
/// Returns nothing when (w, y) is not a Shareshian pair.
inline std::optional<Delta> is_shareshian(const Permutation& w,
                                          const Permutation& y) {
  Permutation::require_same_degree(w, y);
  const int n = w.degree();
  auto tau = y * sigma(n) * w.inverse();
  if (tau.is_identity()) return Delta::singleton(n);

  std::vector<int> orbit{n};
  for (int x = tau(n); x != n; x = tau(x)) {
    if (x >= orbit.back()) return std::nullopt;
    orbit.push_back(x);
  }
  if (orbit.size() == 1) return std::nullopt;  // n fixed but tau != id
  int moved = 0;
  for (int i = 1; i <= n; ++i)
    if (tau(i) != i) ++moved;
  if (static_cast<std::size_t>(moved) != orbit.size()) return std::nullopt;

  Delta delta(n, orbit);
  if (!is_decreasing_for_inverse(w, delta)) return std::nullopt;
  return delta;
}

/// Pair (w, u*) labelling a B_{n-1}-orbit. Always valid once constructed.
class ShareshianPair {
public:
  ShareshianPair(Permutation w, Permutation u_star)
      : w_(std::move(w)), u_star_(std::move(u_star)) {
    auto d = is_shareshian(w_, u_star_);
    if (!d)
      throw std::invalid_argument("not a Shareshian pair: " + to_string());
    delta_ = std::move(*d);
  }

  const Permutation& w() const { return w_; }
  const Permutation& u_star() const { return u_star_; }
  const Delta& delta() const { return delta_; }
  int degree() const { return w_.degree(); }

  /// "w=3,1,2;ustar=1,3,2"
  std::string to_string() const {
    return "w=" + w_.to_string() + ";ustar=" + u_star_.to_string();
  }

  static ShareshianPair parse(const std::string& text, int n) {
    auto fields = parse_fields(text);
    if (fields.size() != 2 || fields[0].first != "w" || fields[1].first != "ustar")
      throw std::invalid_argument("pair must look like 'w=...;ustar=...'");
    return {Permutation::parse(fields[0].second, n),
            Permutation::parse(fields[1].second, n)};
  }

  friend bool operator==(const ShareshianPair& a, const ShareshianPair& b) {
    return a.w_ == b.w_ && a.u_star_ == b.u_star_;
  }
  friend auto operator<=>(const ShareshianPair& a, const ShareshianPair& b) {
    if (auto c = a.w_ <=> b.w_; c != 0) return c;
    return a.u_star_ <=> b.u_star_;
  }

  /// Splits "key=value;key=value".
  static std::vector<std::pair<std::string, std::string>> parse_fields(
      const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("expected key=value in '" + part + "'");
      auto key = part.substr(0, eq);
      key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
      out.emplace_back(key, part.substr(eq + 1));
    }
    return out;
  }

private:
  Permutation w_;
  Permutation u_star_;
  Delta delta_;
};

struct ShareshianPairHash {
  std::size_t operator()(const ShareshianPair& p) const noexcept {
    PermutationHash h;
    return h(p.w()) * 31 + h(p.u_star());
  }
};

/// (w, u) with u = sigma^-1 u* sigma.
struct StandardizedPair {
  Permutation w;
  Permutation u;

  friend bool operator==(const StandardizedPair&, const StandardizedPair&) = default;

  /// s/t words for n = 3, e.g. "(ts,e)".
  std::string to_words() const {
    return "(" + word_string(w) + "," + word_string(u) + ")";
  }
  std::string to_string() const {
    return "w=" + w.to_string() + ";u=" + u.to_string();
  }
};

/// Magyar's label (w, Delta) with Delta decreasing for w^-1.
class DecoratedPermutation {
public:
  DecoratedPermutation(Permutation w, Delta delta)
      : w_(std::move(w)), delta_(std::move(delta)) {
    if (!is_decreasing_for_inverse(w_, delta_))
      throw std::invalid_argument("Delta {" + delta_.to_string() +
                                  "} is not decreasing for w^-1, w=" +
                                  w_.to_string());
  }

  const Permutation& w() const { return w_; }
  const Delta& delta() const { return delta_; }

  /// "w=3,2,1;delta=1,2,3"
  std::string to_string() const {
    return "w=" + w_.to_string() + ";delta=" + delta_.to_string();
  }

  static DecoratedPermutation parse(const std::string& text, int n) {
    auto fields = ShareshianPair::parse_fields(text);
    if (fields.size() != 2 || fields[0].first != "w" || fields[1].first != "delta")
      throw std::invalid_argument("decorated permutation must look like 'w=...;delta=...'");
    auto w = Permutation::parse(fields[0].second, n);
    std::vector<int> elems;
    std::stringstream ss(fields[1].second);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        elems.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad Delta entry '" + tok + "'");
      }
    }
    return {w, Delta(w.degree(), elems)};
  }

  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;

private:
  Permutation w_;
  Delta delta_;
};

inline Delta delta_of_pair(const ShareshianPair& pair) { return pair.delta(); }

inline DecoratedPermutation pair_to_decorated(const ShareshianPair& pair) {
  return {pair.w(), pair.delta()};
}

inline ShareshianPair decorated_to_pair(const DecoratedPermutation& dp) {
  const auto& w = dp.w();
  return {w, tau_of_delta(dp.delta()) * w * sigma(w.degree()).inverse()};
}

inline StandardizedPair standardize(const ShareshianPair& pair) {
  return {pair.w(), unstar(pair.u_star())};
}

inline ShareshianPair destandardize(const StandardizedPair& sp) {
  return {sp.w, to_star(sp.u)};
}

/// All Shareshian pairs of degree n, ordered by w window, then Delta.
inline std::vector<ShareshianPair> enumerate_pairs(int n) {
  Permutation::check_degree(n);
  const auto sig_inv = sigma(n).inverse();
  std::vector<ShareshianPair> out;
  for (const auto& w : all_permutations(n)) {
    std::vector<Delta> deltas;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> elems;
      for (int j = 1; j < n; ++j)
        if (mask & (1u << (j - 1))) elems.push_back(j);
      elems.push_back(n);
      Delta d(n, elems);
      if (is_decreasing_for_inverse(w, d)) deltas.push_back(std::move(d));
    }
    std::sort(deltas.begin(), deltas.end());
    for (const auto& d : deltas)
      out.emplace_back(w, tau_of_delta(d) * w * sig_inv);
  }
  return out;
}

/// Orbit dimension (l(w) + l*(u*) + |Delta| - n) / 2, cross-checked against
/// (l(w) + l(u) - l(u w^-1)) / 2 on the standardized pair.
inline int dim_of_pair(const ShareshianPair& pair) {
  const int n = pair.degree();
  const int twice = length(pair.w()) + star_length(pair.u_star()) +
                    static_cast<int>(pair.delta().size()) - n;
  auto sp = standardize(pair);
  const int twice_std = length(sp.w) + length(sp.u) - length(sp.u * sp.w.inverse());
  if (twice != twice_std || twice < 0 || twice % 2 != 0 || twice / 2 > n * (n - 1) / 2)
    throw std::logic_error("inconsistent dimension for " + pair.to_string() +
                           ": " + std::to_string(twice) + " vs " +
                           std::to_string(twice_std));
  return twice / 2;
}

/// Product Bruhat order: (W,S) on w, (W,S*) on u*.
inline bool closure_leq(const ShareshianPair& lower, const ShareshianPair& upper) {
  return bruhat_leq(lower.w(), upper.w()) &&
         star_bruhat_leq(lower.u_star(), upper.u_star());
}

/// u w^-1 must be s_1 s_2 ... s_{n-1} with the factors s_j, j in Delta \ {n},
/// left out, and its length must be n - |Delta|.
inline bool check_omitted_word(const ShareshianPair& pair) {
  const int n = pair.degree();
  auto sp = standardize(pair);
  auto uw = sp.u * sp.w.inverse();
  auto expected = Permutation::identity(n);
  for (int i = 1; i <= n - 1; ++i)
    if (!pair.delta().contains(i)) expected = expected * simple_reflection(i, n);
  return uw == expected &&
         length(uw) == n - static_cast<int>(pair.delta().size());
}

}  // namespace flagorbits
