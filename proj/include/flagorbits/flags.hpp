#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagorbits/exact_rank.hpp"
#include "flagorbits/pairs.hpp"
#include "flagorbits/permutation.hpp"
#include "flagorbits/weyl.hpp"

namespace flagorbits {

/// e_i, or the hat vector e_i + e_n (i <= n-1).
struct FlagVector {
  enum class Kind { Std, Hat };
  Kind kind = Kind::Std;
  int index = 1;

  friend bool operator==(const FlagVector&, const FlagVector&) = default;
  friend auto operator<=>(const FlagVector&, const FlagVector&) = default;

  std::string to_string() const {
    return (kind == Kind::Hat ? "h" : "e") + std::to_string(index);
  }

  /// Column of coordinates in C^n.
  std::vector<int> coords(int n) const {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(index - 1)] = 1;
    if (kind == Kind::Hat) v[static_cast<std::size_t>(n - 1)] = 1;
    return v;
  }
};

inline FlagVector std_vec(int i) { return {FlagVector::Kind::Std, i}; }
inline FlagVector hat_vec(int i) { return {FlagVector::Kind::Hat, i}; }

/// Returns an empty string when `vectors` is a flag in standard form, else a
/// description of the first violated condition.
inline std::string standard_form_violation(const std::vector<FlagVector>& vectors) {
  const int n = static_cast<int>(vectors.size());
  if (n < 2) return "degree must be at least 2";
  int en_pos = -1, last_hat = n + 1;
  for (int pos = 0; pos < n; ++pos) {
    const auto& v = vectors[static_cast<std::size_t>(pos)];
    if (v.index < 1 || v.index > n)
      return "index " + std::to_string(v.index) + " out of range";
    if (v.kind == FlagVector::Kind::Hat) {
      if (v.index >= n) return "hat vector index must be below n";
      if (en_pos >= 0) return "hat vector after e_n";
      if (v.index >= last_hat) return "hat indices must strictly decrease";
      last_hat = v.index;
    } else if (v.index == n) {
      if (en_pos >= 0) return "e_n occurs twice";
      en_pos = pos;
    }
  }
  if (en_pos < 0) return "e_n does not occur";

  IntMatrix m(n, n);
  for (int c = 0; c < n; ++c) {
    auto col = vectors[static_cast<std::size_t>(c)].coords(n);
    for (int r = 0; r < n; ++r) m(r, c) = col[static_cast<std::size_t>(r)];
  }
  if (exact_rank(m) != n) return "vectors are linearly dependent";
  return {};
}

/// Flag (v_1 < ... < v_n) in standard form.
class StandardFlag {
public:
  explicit StandardFlag(std::vector<FlagVector> vectors) : vectors_(std::move(vectors)) {
    auto why = standard_form_violation(vectors_);
    if (!why.empty())
      throw std::invalid_argument("not a flag in standard form (" + why + "): " +
                                  to_string());
  }

  int degree() const { return static_cast<int>(vectors_.size()); }
  const std::vector<FlagVector>& vectors() const { return vectors_; }
  const FlagVector& operator[](int pos) const {
    return vectors_[static_cast<std::size_t>(pos - 1)];
  }

  bool has_hats() const {
    return std::any_of(vectors_.begin(), vectors_.end(),
                       [](const FlagVector& v) { return v.kind == FlagVector::Kind::Hat; });
  }

  /// "h2,h1,e3"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (i) out.push_back(',');
      out += vectors_[i].to_string();
    }
    return out;
  }

  static StandardFlag parse(const std::string& text, int n) {
    std::vector<FlagVector> vs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'h'))
        throw std::invalid_argument("bad flag token '" + tok + "'");
      int idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad flag token '" + tok + "'");
      }
      vs.push_back({tok[0] == 'h' ? FlagVector::Kind::Hat : FlagVector::Kind::Std, idx});
    }
    if (n > 0 && static_cast<int>(vs.size()) != n)
      throw std::invalid_argument("expected " + std::to_string(n) + " flag vectors, got " +
                                  std::to_string(vs.size()));
    return StandardFlag(std::move(vs));
  }

  friend bool operator==(const StandardFlag&, const StandardFlag&) = default;
  friend auto operator<=>(const StandardFlag&, const StandardFlag&) = default;

private:
  std::vector<FlagVector> vectors_;
};

inline bool validate_standard_form(const std::vector<FlagVector>& vectors) {
  return standard_form_violation(vectors).empty();
}

/// Every flag in standard form, generated directly from the definition:
/// for each arrangement of indices (window order) and each admissible set
/// of hat positions before e_n.
inline std::vector<StandardFlag> enumerate_flags(int n) {
  Permutation::check_degree(n);
  std::vector<StandardFlag> out;
  for (const auto& a : all_permutations(n)) {
    const int p = a.inverse()(n);  // position of e_n
    const int before = p - 1;
    for (unsigned mask = 0; mask < (1u << before); ++mask) {
      std::vector<FlagVector> vs;
      int last_hat = n + 1;
      bool ok = true;
      for (int pos = 1; pos <= n; ++pos) {
        bool hat = pos < p && (mask & (1u << (pos - 1)));
        if (hat) {
          if (a(pos) >= last_hat) {
            ok = false;
            break;
          }
          last_hat = a(pos);
          vs.push_back(hat_vec(a(pos)));
        } else {
          vs.push_back(std_vec(a(pos)));
        }
      }
      if (ok) out.emplace_back(std::move(vs));
    }
  }
  return out;
}

namespace detail {

/// Positions (1-based) of the hat vectors in flag order.
inline std::vector<int> hat_positions(const StandardFlag& f) {
  std::vector<int> out;
  for (int pos = 1; pos <= f.degree(); ++pos)
    if (f[pos].kind == FlagVector::Kind::Hat) out.push_back(pos);
  return out;
}

inline int en_position(const StandardFlag& f) {
  for (int pos = 1; pos <= f.degree(); ++pos)
    if (f[pos].kind == FlagVector::Kind::Std && f[pos].index == f.degree()) return pos;
  throw std::logic_error("standard flag without e_n");
}

}  // namespace detail

/// w with w(E_+) equal to the H-stable flag in B.f: e_n moves to the first
/// hat position and each hat index shifts to the next hat slot (the last one
/// landing where e_n was).
inline Permutation tilde_flag(const StandardFlag& f) {
  const int n = f.degree();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos) w[static_cast<std::size_t>(pos - 1)] = f[pos].index;
  auto hats = detail::hat_positions(f);
  if (!hats.empty()) {
    std::vector<int> slots = hats;
    slots.push_back(detail::en_position(f));
    w[static_cast<std::size_t>(slots[0] - 1)] = n;
    for (std::size_t m = 0; m < hats.size(); ++m)
      w[static_cast<std::size_t>(slots[m + 1] - 1)] = f[hats[m]].index;
  }
  return Permutation(std::move(w));
}

/// u* with u*(E*) equal to the H-stable flag in B*.f (hats replaced in place).
inline Permutation star_flag(const StandardFlag& f) {
  const int n = f.degree();
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos) a[static_cast<std::size_t>(pos - 1)] = f[pos].index;
  // u* sigma = a because E* = sigma(E_+)
  return Permutation(std::move(a)) * sigma(n).inverse();
}

inline ShareshianPair flag_to_pair(const StandardFlag& f) {
  return {tilde_flag(f), star_flag(f)};
}

/// Builds the standard-form representative directly from (w, Delta).
inline StandardFlag pair_to_flag(const ShareshianPair& pair) {
  const auto& w = pair.w();
  const int n = w.degree();
  const auto inv = w.inverse();
  std::vector<FlagVector> vs;
  for (int pos = 1; pos <= n; ++pos) vs.push_back(std_vec(w(pos)));
  auto seq = pair.delta().descending();  // n, j_k, ..., j_1
  // hat of index seq[m+1] sits at w^-1(seq[m]); e_n sits at w^-1(j_1)
  for (std::size_t m = 0; m + 1 < seq.size(); ++m)
    vs[static_cast<std::size_t>(inv(seq[m]) - 1)] = hat_vec(seq[m + 1]);
  vs[static_cast<std::size_t>(inv(seq.back()) - 1)] = std_vec(n);
  return StandardFlag(std::move(vs));
}

/// (n+1)x(n+1) table indexed by p, q = 0..n.
class RankTable {
public:
  RankTable() = default;
  explicit RankTable(int n)
      : n_(n), v_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {}
  int& operator()(int p, int q) { return v_[static_cast<std::size_t>(p * (n_ + 1) + q)]; }
  int operator()(int p, int q) const { return v_[static_cast<std::size_t>(p * (n_ + 1) + q)]; }
  int size() const { return n_ + 1; }
  friend bool operator==(const RankTable&, const RankTable&) = default;

private:
  int n_ = 0;
  std::vector<int> v_;
};

/// r_{p,q} = dim(V_p cap E_q), r*_{p,q} = dim(V_p cap E*_q),
/// delta_{p,q} = dim(L_n cap (V_p + E_q)), rbar = r + delta.
struct RankProfile {
  RankTable r;
  RankTable r_star;
  RankTable delta;
  RankTable r_bar;
};

namespace detail {

inline IntMatrix columns(int n, const std::vector<std::vector<int>>& cols) {
  IntMatrix m(n, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < n; ++r) m(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  return m;
}

inline std::vector<int> unit(int n, int i) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

}  // namespace detail

inline RankProfile rank_profile(const StandardFlag& f) {
  const int n = f.degree();
  RankProfile prof{RankTable(n), RankTable(n), RankTable(n), RankTable(n)};
  for (int p = 0; p <= n; ++p) {
    std::vector<std::vector<int>> vp;
    for (int i = 1; i <= p; ++i) vp.push_back(f[i].coords(n));
    for (int q = 0; q <= n; ++q) {
      std::vector<std::vector<int>> eq, es;
      for (int i = 1; i <= q; ++i) eq.push_back(detail::unit(n, i));
      if (q >= 1) {
        es.push_back(detail::unit(n, n));
        for (int i = 1; i <= q - 1; ++i) es.push_back(detail::unit(n, i));
      }
      auto cols = vp;
      cols.insert(cols.end(), eq.begin(), eq.end());
      const int sum_rank = exact_rank(detail::columns(n, cols));
      prof.r(p, q) = p + q - sum_rank;

      auto cols_star = vp;
      cols_star.insert(cols_star.end(), es.begin(), es.end());
      prof.r_star(p, q) = p + q - exact_rank(detail::columns(n, cols_star));

      cols.push_back(detail::unit(n, n));
      prof.delta(p, q) = exact_rank(detail::columns(n, cols)) == sum_rank ? 1 : 0;
      prof.r_bar(p, q) = prof.r(p, q) + prof.delta(p, q);
    }
  }
  return prof;
}

/// r*_{p,q+1} == rbar_{p,q} for p, q = 0..n-1.
inline bool check_rstar_rbar(const RankProfile& prof) {
  const int n = prof.r.size() - 1;
  for (int p = 0; p <= n - 1; ++p)
    for (int q = 0; q <= n - 1; ++q)
      if (prof.r_star(p, q + 1) != prof.r_bar(p, q)) return false;
  return true;
}

inline bool check_rstar_rbar(const StandardFlag& f) {
  return check_rstar_rbar(rank_profile(f));
}

/// Magyar's closure criterion on precomputed profiles.
inline bool magyar_leq(const RankProfile& lower, const RankProfile& upper) {
  const int n = lower.r.size() - 1;
  if (upper.r.size() != lower.r.size())
    throw std::invalid_argument("magyar_leq: degree mismatch");
  for (int p = 1; p <= n - 1; ++p)
    for (int q = 1; q <= n - 1; ++q)
      if (lower.r(p, q) < upper.r(p, q)) return false;
  for (int p = 0; p <= n - 1; ++p)
    for (int q = 0; q <= n - 1; ++q)
      if (lower.r_bar(p, q) < upper.r_bar(p, q)) return false;
  return true;
}

inline bool magyar_leq(const StandardFlag& lower, const StandardFlag& upper) {
  if (lower.degree() != upper.degree())
    throw std::invalid_argument("magyar_leq: degree mismatch");
  return magyar_leq(rank_profile(lower), rank_profile(upper));
}

/// Orbit dimension computed from the stabilizer in b_{n-1}: the unknowns are
/// the upper-triangular (n-1)x(n-1) entries x_{ab} and coefficients c_{ki}
/// (k <= i) with x v_i = sum_k c_{ki} v_k. Since the v_k are independent the
/// solution space is isomorphic to the stabilizer algebra.
inline int stabilizer_dim(const StandardFlag& f) {
  const int n = f.degree();
  std::vector<std::pair<int, int>> xvars;  // (a, b), 1 <= a <= b <= n-1
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a; b <= n - 1; ++b) xvars.emplace_back(a, b);
  std::vector<std::pair<int, int>> cvars;  // (k, i), 1 <= k <= i <= n
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) cvars.emplace_back(k, i);

  const int unknowns = static_cast<int>(xvars.size() + cvars.size());
  IntMatrix sys(n * n, unknowns);
  for (int i = 1; i <= n; ++i) {
    const auto vi = f[i].coords(n);
    for (int row = 1; row <= n; ++row) {
      const int eq = (i - 1) * n + (row - 1);
      // (x v_i)_row = sum_b x_{row,b} (v_i)_b
      for (std::size_t t = 0; t < xvars.size(); ++t) {
        auto [a, b] = xvars[t];
        if (a == row && vi[static_cast<std::size_t>(b - 1)] != 0)
          sys(eq, static_cast<int>(t)) += vi[static_cast<std::size_t>(b - 1)];
      }
      for (std::size_t t = 0; t < cvars.size(); ++t) {
        auto [k, ii] = cvars[t];
        if (ii != i) continue;
        const int coef = f[k].coords(n)[static_cast<std::size_t>(row - 1)];
        if (coef != 0) sys(eq, static_cast<int>(xvars.size() + t)) -= coef;
      }
    }
  }
  const int stab = unknowns - exact_rank(sys);
  return n * (n - 1) / 2 - stab;
}

}  // namespace flagorbits
