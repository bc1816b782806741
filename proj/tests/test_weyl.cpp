#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <set>

#include "flagorbits/weyl.hpp"

using namespace flagorbits;

namespace {

using Words = std::map<Permutation, std::vector<Permutation>>;

// Shortest word for every element by BFS in the Cayley graph over `gens`,
// appending generators on the right.
Words shortest_words(int n, const std::vector<Permutation>& gens) {
  Words out;
  std::deque<Permutation> queue{Permutation::identity(n)};
  out[queue.front()] = {};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto next = cur * g;
      if (out.count(next)) continue;
      auto word = out[cur];
      word.push_back(g);
      out[next] = word;
      queue.push_back(next);
    }
  }
  return out;
}

std::vector<Permutation> standard_gens(int n) {
  std::vector<Permutation> g;
  for (int i = 1; i < n; ++i) g.push_back(Permutation::from_cycles(n, {{i, i + 1}}));
  return g;
}

std::vector<Permutation> star_gens(int n) {
  std::vector<Permutation> g{Permutation::from_cycles(n, {{1, n}})};
  for (int i = 2; i < n; ++i) g.push_back(Permutation::from_cycles(n, {{i - 1, i}}));
  return g;
}

// Subword property: x <= y iff x is a product of a subword of a reduced word of y.
bool subword_leq(const Permutation& x, const std::vector<Permutation>& reduced_y) {
  const int n = x.degree();
  const std::size_t len = reduced_y.size();
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    auto p = Permutation::identity(n);
    for (std::size_t k = 0; k < len; ++k)
      if (mask & (1u << k)) p = p * reduced_y[k];
    if (p == x) return true;
  }
  return false;
}

}  // namespace

TEST(Permutation, RejectsBadWindows) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 4, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({1}), std::invalid_argument);
  EXPECT_THROW(Permutation::identity(1), std::invalid_argument);
}

TEST(Permutation, ParsesBothSyntaxes) {
  EXPECT_EQ(Permutation::parse("3,1,2", 3), (Permutation{3, 1, 2}));
  EXPECT_EQ(Permutation::parse("(3,2,1)", 3), (Permutation{3, 1, 2}));
  EXPECT_EQ(Permutation::parse("(1,3)", 3), (Permutation{3, 2, 1}));
  EXPECT_EQ(Permutation::parse("(1,2)(3,4)", 4), (Permutation{2, 1, 4, 3}));
  EXPECT_EQ(Permutation::parse("()", 3), Permutation::identity(3));
  EXPECT_EQ(Permutation::parse(" 2, 1 ", 2), (Permutation{2, 1}));
  EXPECT_THROW(Permutation::parse("1,2", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1,1)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("x", 3), std::invalid_argument);
}

TEST(Permutation, TextRoundTrip) {
  for (const auto& p : all_permutations(4)) EXPECT_EQ(Permutation::parse(p.to_string(), 4), p);
}

TEST(Compose, Examples) {
  Permutation s{2, 1, 3}, t{1, 3, 2};
  EXPECT_EQ(compose(s, t), (Permutation{2, 3, 1}));
  EXPECT_EQ(compose(s, Permutation::identity(3)), s);
  EXPECT_EQ(compose(Permutation{3, 1, 2}, Permutation{2, 3, 1}), Permutation::identity(3));
  EXPECT_THROW(compose(s, Permutation::identity(4)), std::invalid_argument);
}

TEST(Compose, AppliesRightFactorFirst) {
  for (const auto& p : all_permutations(4))
    for (const auto& q : all_permutations(4)) {
      auto pq = p * q;
      for (int x = 1; x <= 4; ++x) ASSERT_EQ(pq(x), p(q(x)));
    }
}

TEST(Length, Examples) {
  EXPECT_EQ(length(Permutation::identity(3)), 0);
  EXPECT_EQ(length(Permutation{3, 2, 1}), 3);
  EXPECT_EQ(length(Permutation{2, 3, 1}), 2);
}

TEST(Length, MatchesBfsWordLength) {
  for (int n = 2; n <= 5; ++n) {
    auto words = shortest_words(n, standard_gens(n));
    ASSERT_EQ(words.size(), all_permutations(n).size());
    for (const auto& [w, word] : words) EXPECT_EQ(length(w), static_cast<int>(word.size())) << w;
  }
}

TEST(Length, ComplementWithLongestElement) {
  for (int n = 2; n <= 5; ++n) {
    auto w0 = longest_element(n);
    for (const auto& w : all_permutations(n)) EXPECT_EQ(length(w) + length(w * w0), n * (n - 1) / 2);
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(3), (Permutation{3, 1, 2}));
  EXPECT_EQ(sigma(2), (Permutation{2, 1}));
  for (int n = 2; n <= 7; ++n) {
    auto p = Permutation::identity(n);
    for (int k = 0; k < n; ++k) {
      if (k > 0) {
        EXPECT_FALSE(p.is_identity());
      }
      p = p * sigma(n);
    }
    EXPECT_TRUE(p.is_identity());
    EXPECT_EQ(sigma(n).order(), n);
  }
  EXPECT_THROW(sigma(1), std::invalid_argument);
}

TEST(StarLength, Examples) {
  auto sig = sigma(3);
  EXPECT_EQ(star_length(Permutation::identity(3)), 0);
  EXPECT_EQ(star_length(sig * Permutation{2, 3, 1} * sig.inverse()), 2);
  EXPECT_EQ(star_length(Permutation{3, 2, 1}), 1);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(star_length(Permutation::from_cycles(n, {{1, n}})), 1);
}

TEST(StarLength, MatchesBfsOverStarGenerators) {
  for (int n = 2; n <= 5; ++n) {
    auto words = shortest_words(n, star_gens(n));
    ASSERT_EQ(words.size(), all_permutations(n).size());
    for (const auto& [u, word] : words) EXPECT_EQ(star_length(u), static_cast<int>(word.size())) << u;
  }
}

TEST(StarOfRoot, Examples) {
  EXPECT_EQ(star_of_root(1, 3), (Permutation{3, 2, 1}));
  EXPECT_EQ(star_of_root(2, 3), (Permutation{2, 1, 3}));
  EXPECT_EQ(star_of_root(3, 4), Permutation::from_cycles(4, {{2, 3}}));
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(star_of_root(1, n), star_gens(n)[0]);
  EXPECT_THROW(star_of_root(3, 3), std::out_of_range);
  EXPECT_THROW(star_of_root(0, 3), std::out_of_range);
}

TEST(Bruhat, Examples) {
  EXPECT_TRUE(bruhat_leq(Permutation::identity(3), Permutation{2, 3, 1}));
  EXPECT_TRUE(bruhat_leq(Permutation{2, 1, 3}, Permutation{3, 2, 1}));
  EXPECT_FALSE(bruhat_leq(Permutation{2, 1, 3}, Permutation{1, 3, 2}));
  EXPECT_FALSE(bruhat_leq(Permutation{1, 3, 2}, Permutation{2, 1, 3}));
  EXPECT_THROW(bruhat_leq(Permutation{2, 1}, Permutation{2, 1, 3}), std::invalid_argument);
}

TEST(Bruhat, AgreesWithSubwordCriterion) {
  for (int n = 2; n <= 4; ++n) {
    auto words = shortest_words(n, standard_gens(n));
    for (const auto& [y, word] : words)
      for (const auto& [x, unused] : words)
        EXPECT_EQ(bruhat_leq(x, y), subword_leq(x, word)) << x << " <= " << y;
  }
}

TEST(Bruhat, IsGradedPartialOrder) {
  for (int n = 2; n <= 5; ++n) {
    auto all = all_permutations(n);
    std::vector<std::vector<char>> leq(all.size(), std::vector<char>(all.size()));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) leq[a][b] = bruhat_leq(all[a], all[b]);
    for (std::size_t a = 0; a < all.size(); ++a) {
      ASSERT_TRUE(leq[a][a]);
      for (std::size_t b = 0; b < all.size(); ++b) {
        if (a != b && leq[a][b]) {
          ASSERT_FALSE(leq[b][a]);
          ASSERT_LT(length(all[a]), length(all[b]));
        }
      }
    }
    if (n <= 4)
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b)
          for (std::size_t c = 0; c < all.size(); ++c)
            if (leq[a][b] && leq[b][c]) ASSERT_TRUE(leq[a][c]);
    // covers change length by exactly one
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) {
        if (a == b || !leq[a][b]) continue;
        bool cover = true;
        for (std::size_t c = 0; c < all.size() && cover; ++c)
          if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
        if (cover) EXPECT_EQ(length(all[b]), length(all[a]) + 1);
      }
  }
}

TEST(StarBruhat, Examples) {
  auto sig = sigma(3);
  Permutation s{2, 1, 3}, sts{3, 2, 1};
  for (const auto& u : all_permutations(3)) EXPECT_TRUE(star_bruhat_leq(u, u));
  EXPECT_TRUE(star_bruhat_leq(Permutation::identity(3), star_of_root(1, 3)));
  EXPECT_TRUE(star_bruhat_leq(sig * s * sig.inverse(), sig * sts * sig.inverse()));
}

TEST(StarBruhat, AgreesWithSubwordOverStarGenerators) {
  for (int n = 2; n <= 4; ++n) {
    auto words = shortest_words(n, star_gens(n));
    for (const auto& [y, word] : words)
      for (const auto& [x, unused] : words)
        EXPECT_EQ(star_bruhat_leq(x, y), subword_leq(x, word)) << x << " <=* " << y;
  }
}

TEST(MonoidW, Examples) {
  auto e = Permutation::identity(3);
  Permutation t{1, 3, 2};
  EXPECT_EQ(monoid_w(1, e, Side::Left), (Permutation{2, 1, 3}));
  EXPECT_EQ(monoid_w(2, t, Side::Right), t);
  EXPECT_EQ(monoid_w(1, t, Side::Left), (Permutation{2, 3, 1}));
  EXPECT_THROW(monoid_w(3, t, Side::Left), std::out_of_range);
}

TEST(MonoidW, Idempotent) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (int i = 1; i < n; ++i)
        for (Side side : {Side::Left, Side::Right}) {
          auto once = monoid_w(i, w, side);
          EXPECT_EQ(monoid_w(i, once, side), once);
          EXPECT_GE(length(once), length(w));
        }
}

TEST(RootLabel, ParseAndRange) {
  auto r = RootLabel::parse("left:2");
  EXPECT_EQ(r.side, RootLabel::Kind::LeftK);
  EXPECT_EQ(r.index, 2);
  EXPECT_EQ(RootLabel::parse("right:3").to_string(), "right:3");
  EXPECT_THROW(RootLabel::parse("up:1"), std::invalid_argument);
  EXPECT_THROW(RootLabel::parse("left:x"), std::invalid_argument);
  EXPECT_THROW(RootLabel::parse("left1"), std::invalid_argument);
  EXPECT_THROW((RootLabel{RootLabel::Kind::LeftK, 2}.check(3)), std::out_of_range);
  EXPECT_NO_THROW((RootLabel{RootLabel::Kind::RightG, 2}.check(3)));
  EXPECT_EQ(all_roots(3).size(), 3u);
  EXPECT_EQ(all_roots(5).size(), 7u);
}

TEST(Words, ReducedAndRoundTrip) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      auto word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), length(w));
      auto p = Permutation::identity(n);
      for (int g : word) p = p * simple_reflection(g, n);
      EXPECT_EQ(p, w);
    }
  EXPECT_EQ(word_string(Permutation{2, 3, 1}), "st");
  EXPECT_EQ(word_string(Permutation{3, 1, 2}), "ts");
  EXPECT_EQ(word_string(Permutation::identity(3)), "e");
  for (const auto& w : all_permutations(3)) EXPECT_EQ(parse_st_word(word_string(w)), w);
  EXPECT_EQ(parse_st_word("tst"), parse_st_word("sts"));
}
