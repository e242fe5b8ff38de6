#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "monoid_ideals/catalog.hpp"
#include "monoid_ideals/factor_search.hpp"
#include "monoid_ideals/ideal_enumeration.hpp"
#include "monoid_ideals/predicates.hpp"
#include "monoid_ideals/rewriting.hpp"
#include "oracles.hpp"

using namespace monoid_ideals;
using fixtures::w;

namespace {

  word_type random_word(std::mt19937_64& rng, std::size_t k, std::size_t min, std::size_t max) {
    word_type result(min + rng() % (max - min + 1));
    for (auto& l : result) {
      l = static_cast<letter_type>(rng() % k);
    }
    return result;
  }

}  // namespace

TEST(Properties, FactorSearchAgreesWithSubstringScan) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 10000; ++round) {
    std::size_t const      k = 1 + rng() % 3;
    std::vector<word_type> patterns(1 + rng() % 4);
    for (auto& p : patterns) {
      p = random_word(rng, k, 1, 4);
    }
    auto const       text = random_word(rng, k, 0, 12);
    AhoCorasick const ac(k, patterns);
    EXPECT_EQ(ac.contains_any(text), oracle::has_any_factor(patterns, text));
    std::vector<Occurrence> expected;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      for (std::size_t at = 0; at + patterns[i].size() <= text.size(); ++at) {
        if (std::equal(patterns[i].begin(), patterns[i].end(), text.begin() + at)) {
          expected.push_back({i, at});
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(ac.find_all(text), expected);
  }
}

TEST(Properties, KleeneConnectivesMatchTruthTables) {
  std::vector<Membership> const all{Membership::out, Membership::in, Membership::unknown};
  for (auto x : all) {
    EXPECT_EQ(kleene_not(kleene_not(x)), x);
    for (auto y : all) {
      EXPECT_EQ(kleene_and(x, y), kleene_and(y, x));
      EXPECT_EQ(kleene_or(x, y), kleene_not(kleene_and(kleene_not(x), kleene_not(y))));
      if (x != Membership::unknown && y != Membership::unknown) {
        EXPECT_EQ(kleene_and(x, y), to_membership(x == Membership::in && y == Membership::in));
      }
    }
  }
  EXPECT_EQ(kleene_and(Membership::out, Membership::unknown), Membership::out);
  EXPECT_EQ(kleene_or(Membership::in, Membership::unknown), Membership::in);
}

// Completed systems rewrite every word to the same normal form as the
// naive leftmost rewriter using the same rules, and equal words have equal
// normal forms after any insertion of a relation.
TEST(Properties, CompletionIsConfluentOnSamples) {
  std::vector<std::vector<relation_type>> presentations{
      {{w("ab"), {}}},
      {{w("ba"), w("ab")}},
      {{w("aa"), w("a")}, {w("bb"), w("b")}},
      {{w("aba"), w("b")}},
      {{w("aaa"), {}}, {w("bb"), {}}, {w("abab"), {}}}};
  std::mt19937_64 rng(5);
  for (auto const& rels : presentations) {
    auto const c = knuth_bendix(2, rels);
    ASSERT_EQ(c.status, CompletionStatus::confluent);
    RewritingSystem const                   system(2, c.rules);
    std::vector<std::pair<oracle::word, oracle::word>> naive;
    for (auto const& rule : c.rules) {
      naive.emplace_back(rule.lhs, rule.rhs);
    }
    for (int round = 0; round < 300; ++round) {
      auto const x = random_word(rng, 2, 0, 8);
      EXPECT_EQ(system.rewrite(x), oracle::rewrite(naive, x));
      auto const& [l, r] = rels[rng() % rels.size()];
      auto const cut     = rng() % (x.size() + 1);
      word_type  u(x.begin(), x.begin() + cut), v(x.begin() + cut, x.end());
      EXPECT_EQ(system.rewrite(concat(concat(u, l), v)), system.rewrite(concat(concat(u, r), v)));
    }
  }
}

// Ideal unions are ideals and unions of associative ideals are associative,
// on every pair of ideals of every monoid of order at most 4.
TEST(Properties, UnionsOfIdeals) {
  for (auto const& entry : enumerate_finite_monoids_up_to(4)) {
    auto const& t      = entry.monoid->table();
    auto const  masks  = all_ideal_masks(*entry.monoid);
    for (auto a : masks) {
      for (auto b : masks) {
        EXPECT_TRUE(oracle::is_ideal(t, a | b));
        EXPECT_TRUE(oracle::is_ideal(t, a & b));
        if (oracle::is_associative(t, a) && oracle::is_associative(t, b)) {
          EXPECT_TRUE(oracle::is_associative(t, a | b)) << entry.id;
        }
      }
    }
  }
}

// Verdicts on bigger radii never contradict smaller ones.
TEST(Properties, VerdictsAreMonotoneInRadius) {
  auto const ab = fixtures::free({"a", "b"});
  std::mt19937_64 rng(3);
  for (int round = 0; round < 20; ++round) {
    std::vector<word_type> gens{random_word(rng, 2, 1, 3), random_word(rng, 2, 1, 3)};
    bool failed = false;
    for (std::size_t r = 1; r <= 4; ++r) {
      auto const q = IdealSet<FreeMonoid>::closure(ab, gens, r);
      auto const v = is_associative(q, r);
      if (failed) {
        EXPECT_TRUE(v.fails());
      }
      failed = v.fails();
    }
  }
}
