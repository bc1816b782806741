// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "../tools/cli.hpp"
#include "flagorbits/flagorbits.hpp"

using namespace flagorbits;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// The n = 3 diagram: rows top to bottom are dimensions 0..3.
const std::vector<std::vector<std::string>> kRows{
    {"(e,st)", "(t,s)", "(ts,e)"},
    {"(s,tst)", "(t,st)", "(st,ts)", "(ts,s)", "(sts,t)"},
    {"(st,tst)", "(ts,sts)", "(tst,st)", "(sts,ts)"},
    {"(sts,sts)"}};

struct FigureEdge {
  std::string lower, upper, color;
  bool dashed;
  char label;  // 'a' = alpha, 'b' = beta, 0 = none
};

const std::vector<FigureEdge> kEdges{
    {"(e,st)", "(s,tst)", "blue", false, 'a'},   {"(e,st)", "(t,st)", "red", false, 'b'},
    {"(t,s)", "(t,st)", "red", false, 'b'},      {"(t,s)", "(st,ts)", "blue", true, 0},
    {"(t,s)", "(ts,s)", "red", false, 'a'},      {"(ts,e)", "(ts,s)", "red", false, 'a'},
    {"(ts,e)", "(sts,t)", "blue", false, 'b'},   {"(s,tst)", "(st,tst)", "red", false, 'b'},
    {"(s,tst)", "(ts,sts)", "green", false, 0},  {"(t,st)", "(st,tst)", "blue", true, 0},
    {"(t,st)", "(ts,sts)", "blue", false, 'a'},  {"(t,st)", "(tst,st)", "green", false, 0},
    {"(st,ts)", "(st,tst)", "red", false, 'b'},  {"(st,ts)", "(sts,ts)", "red", false, 'a'},
    {"(ts,s)", "(ts,sts)", "green", false, 0},   {"(ts,s)", "(sts,ts)", "blue", true, 0},
    {"(ts,s)", "(tst,st)", "blue", false, 'b'},  {"(sts,t)", "(sts,ts)", "red", false, 'a'},
    {"(sts,t)", "(tst,st)", "green", false, 0},  {"(st,tst)", "(sts,sts)", "red", false, 'a'},
    {"(ts,sts)", "(sts,sts)", "red", false, 'b'}, {"(tst,st)", "(sts,sts)", "red", false, 'a'},
    {"(sts,ts)", "(sts,sts)", "red", false, 'b'}};

// "(w,u)" in s/t letters to the standardized pair.
StandardizedPair parse_node(const std::string& text) {
  auto comma = text.find(',');
  return {parse_st_word(text.substr(1, comma - 1)),
          parse_st_word(text.substr(comma + 1, text.size() - comma - 2))};
}

Outcome ac1() {
  auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"enumerate", "3", "--format", "json"}, out, err);
  const auto rows = nlohmann::json::parse(out.str()).size();
  const double secs = seconds_since(t0);
  return {code == 0 && rows == 13 && secs < 1.0,
          std::to_string(rows) + " orbits in " + std::to_string(secs) + " s"};
}

Outcome ac2() {
  std::map<int, int> hist;
  for (const auto& rec : build_atlas(3)) ++hist[rec.dim];
  const std::map<int, int> want{{0, 3}, {1, 5}, {2, 4}, {3, 1}};
  std::string text;
  for (auto [d, c] : hist) text += std::to_string(d) + ":" + std::to_string(c) + " ";
  return {hist == want, "histogram " + text};
}

Outcome ac3() {
  auto poset = build_poset(3);
  std::map<StandardizedPair, int, std::function<bool(const StandardizedPair&, const StandardizedPair&)>>
      id([](const StandardizedPair& a, const StandardizedPair& b) {
        return std::tie(a.w, a.u) < std::tie(b.w, b.u);
      });
  for (const auto& rec : poset.orbits) id[rec.standardized] = rec.id;

  Outcome o;
  std::size_t figure_nodes = 0;
  for (std::size_t level = 0; level < kRows.size(); ++level)
    for (const auto& label : kRows[level]) {
      ++figure_nodes;
      auto it = id.find(parse_node(label));
      if (it == id.end()) return {false, "figure node " + label + " is not an orbit"};
      if (poset.orbits[static_cast<std::size_t>(it->second)].dim != static_cast<int>(level))
        return {false, "node " + label + " on the wrong level"};
    }
  if (figure_nodes != poset.orbits.size()) return {false, "node count differs"};

  using Key = std::pair<int, int>;
  std::map<Key, FigureEdge> figure;
  for (const auto& e : kEdges)
    figure.emplace(Key{id.at(parse_node(e.lower)), id.at(parse_node(e.upper))}, e);
  if (figure.size() != kEdges.size()) return {false, "duplicate figure edge"};
  if (poset.covers.size() != figure.size())
    return {false, std::to_string(poset.covers.size()) + " covers vs " +
                       std::to_string(figure.size()) + " figure edges"};

  int green = 0;
  for (const auto& e : poset.covers) {
    auto it = figure.find({e.lower, e.upper});
    const std::string name = orbit_label(poset.orbits[static_cast<std::size_t>(e.lower)]) +
                             "->" + orbit_label(poset.orbits[static_cast<std::size_t>(e.upper)]);
    if (it == figure.end()) return {false, "cover " + name + " missing from figure"};
    const auto style = classify_edge(e);
    const auto& want = it->second;
    if (style.color != want.color || style.dashed != want.dashed)
      return {false, name + " drawn " + style.color + (style.dashed ? " dashed" : " solid")};
    if (want.label) {
      const int index = want.label == 'a' ? 1 : 2;
      bool found = false;
      for (const auto& m : e.moves)
        if (m.root.side == RootLabel::Kind::RightG && m.root.index == index) found = true;
      if (!found) return {false, name + " lacks its right root " + std::string(1, want.label)};
    }
    if (want.dashed)
      for (const auto& m : e.moves)
        if (m.root.side != RootLabel::Kind::LeftK) return {false, name + " has a right move"};
    if (style.color == "green") ++green;
  }
  o.detail = "13 nodes, 4 levels, " + std::to_string(poset.covers.size()) +
             " edges with matching colors and styles, " + std::to_string(green) + " move-less";
  return o;
}

Outcome per_n(int max_n, const std::function<CheckResult(int, const std::vector<OrbitRecord>&)>& check,
              const std::string& what, double limit_secs = 0) {
  long long cases = 0;
  std::string timing;
  for (int n = 2; n <= max_n; ++n) {
    auto atlas = build_atlas(n);
    auto t0 = Clock::now();
    auto res = check(n, atlas);
    const double secs = seconds_since(t0);
    cases += res.cases;
    if (!res.passed) return {false, "n=" + std::to_string(n) + ": " + res.counterexample};
    if (n == max_n) {
      timing = ", n=" + std::to_string(n) + " in " + std::to_string(secs) + " s";
      if (limit_secs > 0 && secs > limit_secs) return {false, "too slow" + timing};
    }
  }
  return {true, std::to_string(cases) + " " + what + " for n<=" + std::to_string(max_n) + timing};
}

Outcome ac4() {
  return per_n(5, [](int, const auto& a) { return check_closure_equivalence(a); },
               "ordered pairs agree", 120.0);
}

Outcome ac5() {
  return per_n(5, [](int, const auto& a) { return check_dimension_formula(a); },
               "orbits agree");
}

Outcome ac6() {
  return per_n(5, [](int, const auto& a) { return check_rstar_identity(a); }, "flags satisfy it");
}

Outcome ac7() {
  return per_n(6, [](int n, const auto& a) { return check_generation(n, a); },
               "pairs generated");
}

Outcome ac8() {
  return per_n(5, [](int, const auto& a) { return check_move_laws(a); },
               "orbits and moves checked");
}

Outcome ac9() {
  auto trips = per_n(5, [](int n, const auto& a) { return check_round_trips(n, a); },
                     "round trips");
  if (!trips.pass) return trips;
  for (int n = 2; n <= 5; ++n) {
    int zero = 0, top = 0;
    for (const auto& rec : build_atlas(n)) {
      zero += rec.dim == 0;
      top += rec.dim == n * (n - 1) / 2;
    }
    if (zero != n || top != 1)
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(zero) + " closed, " +
                         std::to_string(top) + " open"};
  }
  return {true, trips.detail + "; n closed orbits and one open orbit for n<=5"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 n=3 orbit count is 13", ac1},
      {"AC2 n=3 dimension histogram {0:3,1:5,2:4,3:1}", ac2},
      {"AC3 n=3 Hasse diagram matches the drawing", ac3},
      {"AC4 rank criterion == Bruhat order on pairs", ac4},
      {"AC5 stabilizer dimension == both dimension formulas", ac5},
      {"AC6 r*_{p,q+1} == rbar_{p,q}", ac6},
      {"AC7 closed orbits generate every pair", ac7},
      {"AC8 move laws and omitted-word shape", ac8},
      {"AC9 label round trips and extreme dimensions", ac9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << "  (" << o.detail << ")\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 9 criteria pass") << "\n";
  return failed ? 1 : 0;
}
