#pragma once

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flagorbits/atlas.hpp"
#include "flagorbits/flags.hpp"
#include "flagorbits/monoid.hpp"
#include "flagorbits/pairs.hpp"

namespace flagorbits {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  char letter = '?';
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct VerifyReport {
  int n = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // measurements that are reported, not asserted

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }

  const CheckResult* find(char letter) const {
    for (const auto& c : checks)
      if (c.letter == letter) return &c;
    return nullptr;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "verify n=" << n << "\n";
    for (const auto& c : checks) {
      os << "  (" << c.letter << ") " << (c.passed ? "PASS" : "FAIL") << "  " << c.name
         << "  [" << c.cases << " cases]\n";
      if (!c.passed) os << "      counterexample: " << c.counterexample << "\n";
    }
    for (const auto& note : notes) os << "  note: " << note << "\n";
    os << "overall: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

namespace detail {

inline void fail_once(CheckResult& c, const std::string& why) {
  if (c.passed) {
    c.passed = false;
    c.counterexample = why;
  }
}

}  // namespace detail

/// (a) Magyar's rank criterion on flags agrees with the product Bruhat order
/// on pairs, for every ordered pair of records.
inline CheckResult check_closure_equivalence(const std::vector<OrbitRecord>& orbits) {
  CheckResult c{'a', "rank-invariant closure criterion == Bruhat order on pairs", true, 0, {}};
  std::vector<RankProfile> profiles;
  profiles.reserve(orbits.size());
  for (const auto& rec : orbits) profiles.push_back(rank_profile(rec.flag));
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      ++c.cases;
      const bool by_rank = magyar_leq(profiles[i], profiles[j]);
      const bool by_pair = closure_leq(orbits[i].pair, orbits[j].pair);
      if (by_rank != by_pair)
        detail::fail_once(c, "flags " + orbits[i].flag.to_string() + " <= " +
                                 orbits[j].flag.to_string() + " is " +
                                 (by_rank ? "true" : "false") + " but pairs " +
                                 orbits[i].pair.to_string() + " <= " +
                                 orbits[j].pair.to_string() + " is " +
                                 (by_pair ? "true" : "false"));
    }
  return c;
}

/// (b) stabilizer_dim(flag) == dimension formula (both forms).
inline CheckResult check_dimension_formula(const std::vector<OrbitRecord>& orbits) {
  CheckResult c{'b', "stabilizer dimension == (l(w)+l*(u*)+|Delta|-n)/2 == (l(w)+l(u)-l(uw^-1))/2", true, 0, {}};
  for (const auto& rec : orbits) {
    ++c.cases;
    try {
      const int formula = dim_of_pair(rec.pair);
      const int stab = stabilizer_dim(rec.flag);
      if (formula != stab)
        detail::fail_once(c, rec.pair.to_string() + ": formula " + std::to_string(formula) +
                                 ", stabilizer " + std::to_string(stab));
    } catch (const std::logic_error& e) {
      detail::fail_once(c, e.what());
    }
  }
  return c;
}

/// (c) r*_{p,q+1} == rbar_{p,q} on every flag.
inline CheckResult check_rstar_identity(const std::vector<OrbitRecord>& orbits) {
  CheckResult c{'c', "r*_{p,q+1} == rbar_{p,q} for p,q = 0..n-1", true, 0, {}};
  for (const auto& rec : orbits) {
    ++c.cases;
    if (!check_rstar_rbar(rec.flag)) detail::fail_once(c, "flag " + rec.flag.to_string());
  }
  return c;
}

/// (d) the monoid closure of the closed orbits is every pair.
inline CheckResult check_generation(int n, const std::vector<OrbitRecord>& orbits) {
  CheckResult c{'d', "generate_from_closed(n) == enumerate_pairs(n)", true, 0, {}};
  auto gen = generate_from_closed(n);
  std::set<ShareshianPair> generated(gen.pairs.begin(), gen.pairs.end());
  std::set<ShareshianPair> listed;
  for (const auto& rec : orbits) listed.insert(rec.pair);
  auto enumerated = enumerate_pairs(n);
  std::set<ShareshianPair> all(enumerated.begin(), enumerated.end());
  c.cases = static_cast<long long>(all.size());
  for (const auto& p : all)
    if (!generated.count(p)) detail::fail_once(c, "not reachable: " + p.to_string());
  for (const auto& p : generated)
    if (!all.count(p)) detail::fail_once(c, "generated but not enumerated: " + p.to_string());
  if (listed != all) detail::fail_once(c, "orbit list differs from enumerate_pairs");
  for (const auto& [p, d] : gen.depth)
    if (d != dim_of_pair(p))
      detail::fail_once(c, p.to_string() + " at depth " + std::to_string(d) + " has dim " +
                               std::to_string(dim_of_pair(p)));
  return c;
}

/// (e) omitted-generator word shape and the move laws.
inline CheckResult check_move_laws(const std::vector<OrbitRecord>& orbits) {
  CheckResult c{'e', "omitted-word shape of uw^-1; moves raise dim by 1; Delta growth", true, 0, {}};
  std::vector<ShareshianPair> pairs;
  for (const auto& rec : orbits) {
    ++c.cases;
    pairs.push_back(rec.pair);
    if (!check_omitted_word(rec.pair)) detail::fail_once(c, "omitted word: " + rec.pair.to_string());
  }
  for (const auto& mv : all_moves(pairs)) {
    ++c.cases;
    const std::string where = mv.root.to_string() + " on " + mv.source.to_string();
    if (!check_delta_growth(mv)) detail::fail_once(c, "Delta growth: " + where);
    if (mv.productive()) {
      if (dim_of_pair(mv.target) != dim_of_pair(mv.source) + 1)
        detail::fail_once(c, "dimension step: " + where);
      if (!closure_leq(mv.source, mv.target) || mv.source == mv.target)
        detail::fail_once(c, "move not upward in closure order: " + where);
    } else if (!(mv.target == mv.source)) {
      detail::fail_once(c, "unproductive move changed the pair: " + where);
    }
  }
  return c;
}

/// (f) flag <-> pair <-> decorated <-> standardized round trips, and the
/// flag enumeration maps onto the pair enumeration.
inline CheckResult check_round_trips(int n, const std::vector<OrbitRecord>& orbits) {
  CheckResult c{'f', "bijection round trips flag <-> pair <-> decorated <-> standardized", true, 0, {}};
  for (const auto& rec : orbits) {
    ++c.cases;
    if (!(flag_to_pair(rec.flag) == rec.pair)) detail::fail_once(c, "flag_to_pair: " + rec.flag.to_string());
    if (!(pair_to_flag(rec.pair) == rec.flag)) detail::fail_once(c, "pair_to_flag: " + rec.pair.to_string());
    if (!(decorated_to_pair(pair_to_decorated(rec.pair)) == rec.pair))
      detail::fail_once(c, "decorated: " + rec.pair.to_string());
    if (!(destandardize(standardize(rec.pair)) == rec.pair))
      detail::fail_once(c, "standardized: " + rec.pair.to_string());
  }
  std::set<ShareshianPair> from_flags;
  auto flags = enumerate_flags(n);
  for (const auto& f : flags) from_flags.insert(flag_to_pair(f));
  std::set<ShareshianPair> listed;
  for (const auto& rec : orbits) listed.insert(rec.pair);
  if (from_flags.size() != flags.size()) detail::fail_once(c, "flag_to_pair is not injective");
  if (from_flags != listed) detail::fail_once(c, "flag enumeration does not match the orbit list");
  return c;
}

/// Runs the checks on a given orbit list. Quick runs (b), (d), (e); Full runs
/// (a) through (f).
inline VerifyReport verify(int n, const std::vector<OrbitRecord>& orbits,
                           VerifyLevel level = VerifyLevel::Full) {
  VerifyReport report;
  report.n = n;
  if (level == VerifyLevel::Full) report.checks.push_back(check_closure_equivalence(orbits));
  report.checks.push_back(check_dimension_formula(orbits));
  if (level == VerifyLevel::Full) report.checks.push_back(check_rstar_identity(orbits));
  report.checks.push_back(check_generation(n, orbits));
  report.checks.push_back(check_move_laws(orbits));
  if (level == VerifyLevel::Full) report.checks.push_back(check_round_trips(n, orbits));

  std::vector<int> dims;
  for (const auto& rec : orbits) dims.push_back(rec.dim);
  const int top = n * (n - 1) / 2;
  report.notes.push_back(std::to_string(orbits.size()) + " orbits; " +
                         std::to_string(std::count(dims.begin(), dims.end(), 0)) +
                         " of dimension 0, " +
                         std::to_string(std::count(dims.begin(), dims.end(), top)) +
                         " of dimension " + std::to_string(top));

  if (level == VerifyLevel::Full) {
    auto poset = build_poset(n);
    int green = 0, green_skips = 0, skips = 0;
    for (const auto& e : poset.covers) {
      const bool adjacent = poset.orbits[static_cast<std::size_t>(e.upper)].dim ==
                            poset.orbits[static_cast<std::size_t>(e.lower)].dim + 1;
      if (!adjacent) ++skips;
      if (e.moves.empty()) {
        ++green;
        if (!adjacent) ++green_skips;
      }
    }
    report.notes.push_back(std::to_string(poset.covers.size()) + " covers, " +
                           std::to_string(green) + " without a monoid move; " +
                           std::to_string(skips) + " covers skip a dimension (" +
                           std::to_string(green_skips) + " of them move-less)");
  }
  if (n == 3) {
    // The label w=(1,3), u*=(1,3) is not a pair; the Delta = {1,2,3} orbit is
    // w=(1,3), u*=(2,3).
    const bool bogus = is_shareshian(Permutation{3, 2, 1}, Permutation{3, 2, 1}).has_value();
    report.notes.push_back(std::string("(w=3,2,1; ustar=3,2,1) is ") +
                           (bogus ? "" : "not ") +
                           "a Shareshian pair; the Delta={1,2,3} orbit is " +
                           decorated_to_pair(DecoratedPermutation(Permutation{3, 2, 1},
                                                                  Delta(3, {1, 2, 3})))
                               .to_string());
  }
  return report;
}

inline VerifyReport verify(int n, VerifyLevel level = VerifyLevel::Full) {
  return verify(n, build_atlas(n), level);
}

}  // namespace flagorbits
