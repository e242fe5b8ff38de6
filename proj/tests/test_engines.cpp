#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "monoid_ideals/engine.hpp"
#include "monoid_ideals/morphism.hpp"
#include "oracles.hpp"

using namespace monoid_ideals;
using fixtures::w;

namespace {
  bool has_issue(FiniteValidation const& v, ErrorCode code) {
    return std::any_of(v.errors.begin(), v.errors.end(),
                       [&](TableIssue const& i) { return i.code == code; });
  }
}  // namespace

TEST(FiniteMonoid, TrivialTableIsValid) {
  auto const v = FiniteMonoid::validate({"E"}, 0, {{0}}, {});
  ASSERT_TRUE(v.monoid.has_value());
  EXPECT_EQ(v.monoid->size(), 1U);
}

TEST(FiniteMonoid, Fm3IsValid) {
  auto const m = fixtures::fm3();
  EXPECT_EQ(m->multiply(1, 1), 2U);
  EXPECT_EQ(m->multiply(0, 1), 1U);
  EXPECT_TRUE(oracle::associative(m->table()));
}

TEST(FiniteMonoid, BadIdentity) {
  auto const v = FiniteMonoid::validate({"E", "a"}, 0, {{0, 0}, {1, 1}}, {});
  EXPECT_FALSE(v.monoid.has_value());
  EXPECT_TRUE(has_issue(v, ErrorCode::bad_identity));
}

TEST(FiniteMonoid, NonAssociativeTripleIsReported) {
  // a·a = b, a·b = a, b·a = b, b·b = a: (a·a)·a = b·a = b but a·(a·a) = a·b = a.
  auto const v = FiniteMonoid::validate({"E", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 1}, {2, 2, 1}}, {});
  EXPECT_FALSE(v.monoid.has_value());
  EXPECT_TRUE(has_issue(v, ErrorCode::non_associative));
}

TEST(FiniteMonoid, MalformedTable) {
  EXPECT_TRUE(has_issue(FiniteMonoid::validate({"E", "a"}, 0, {{0, 1}, {1}}, {}),
                        ErrorCode::malformed_table));
  EXPECT_TRUE(has_issue(FiniteMonoid::validate({"E", "a"}, 0, {{0, 1}, {1, 7}}, {}),
                        ErrorCode::malformed_table));
}

TEST(FiniteMonoid, MakeThrowsOnInvalidTable) {
  try {
    FiniteMonoid::make({"E", "a"}, 0, {{0, 0}, {1, 1}});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::bad_identity);
  }
}

TEST(FiniteMonoid, BallIsWholeMonoid) {
  auto const b = fixtures::fm3()->ball(1);
  EXPECT_TRUE(b.exhaustive);
  EXPECT_EQ(b.elements, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(FreeMonoid, MultiplyConcatenates) {
  auto const m = fixtures::free({"a", "b"});
  EXPECT_EQ(m->multiply(w("ab"), w("a")), w("aba"));
  EXPECT_EQ(m->identity(), word_type{});
}

TEST(FreeMonoid, BallIsShortlex) {
  auto const b = fixtures::free({"a", "b"})->ball(2);
  EXPECT_FALSE(b.exhaustive);
  EXPECT_EQ(b.elements,
            (std::vector<word_type>{{}, w("a"), w("b"), w("aa"), w("ab"), w("ba"), w("bb")}));
}

TEST(FreeMonoid, UnknownElementIsRejected) {
  auto const m = fixtures::free({"a"});
  try {
    require_element(*m, w("ab"));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_element);
  }
}

TEST(PresentedMonoid, BicyclicMultiplication) {
  auto const m = fixtures::bicyclic();
  EXPECT_EQ(m->multiply(w("a"), w("b")), word_type{});
  EXPECT_EQ(m->normalize(w("aab")).word, w("a"));
  EXPECT_EQ(m->normalize(word_type{}).word, word_type{});
  EXPECT_EQ(m->status(), CompletionStatus::confluent);
}

TEST(PresentedMonoid, IdempotentGeneratorBallSaturates) {
  auto const m = std::make_shared<PresentedMonoid const>(
      PresentedMonoid::complete(Alphabet({"a"}), {{w("aa"), w("a")}}));
  EXPECT_EQ(m->normalize(w("aaa")).word, w("a"));
  auto const b = m->ball(3);
  EXPECT_TRUE(b.exhaustive);
  EXPECT_EQ(b.elements, (std::vector<word_type>{{}, w("a")}));
}

TEST(PresentedMonoid, BraidWithOneRuleIsPartial) {
  auto const m = PresentedMonoid::complete(Alphabet({"a", "b"}), {{w("aba"), w("bab")}},
                                           CompletionBudget{1, 32});
  EXPECT_EQ(m.status(), CompletionStatus::partial);
  EXPECT_FALSE(m.confluent());
  // Homogeneous, so equality is still decided through the finite classes.
  EXPECT_TRUE(m.exact_equality());
  EXPECT_EQ(m.canonical(w("bab")), m.canonical(w("aba")));
}

TEST(PresentedMonoid, AxiomsOnBalls) {
  auto check = [](auto const& m) {
    auto const b = m->ball(3);
    for (auto const& x : b.elements) {
      EXPECT_EQ(m->multiply(m->identity(), x), x);
      EXPECT_EQ(m->multiply(x, m->identity()), x);
      for (auto const& y : b.elements) {
        for (auto const& z : b.elements) {
          EXPECT_EQ(m->multiply(m->multiply(x, y), z), m->multiply(x, m->multiply(y, z)));
        }
      }
    }
  };
  check(fixtures::bicyclic());
  check(fixtures::commutative());
}

TEST(PresentedMonoid, BallsAreNestedAndSorted) {
  auto const m = fixtures::bicyclic();
  for (std::size_t r = 0; r < 5; ++r) {
    auto const small = m->ball(r).elements;
    auto const big   = m->ball(r + 1).elements;
    EXPECT_TRUE(std::is_sorted(small.begin(), small.end(), ShortlexLess()));
    for (auto const& x : small) {
      EXPECT_NE(std::find(big.begin(), big.end(), x), big.end());
    }
  }
}

TEST(PresentedMonoid, NormalizeIsIdempotentAndCompatible) {
  auto const m = fixtures::bicyclic();
  for (auto const& u : oracle::words_up_to(2, 4)) {
    auto const nu = m->normalize(u).word;
    EXPECT_EQ(m->normalize(nu).word, nu);
    for (auto const& v : oracle::words_up_to(2, 2)) {
      EXPECT_EQ(m->normalize(concat(u, v)).word,
                m->normalize(concat(nu, m->normalize(v).word)).word);
    }
  }
}

TEST(Morphism, FreeOntoFreeIsSurjective) {
  auto const f = Morphism<FreeMonoid, FreeMonoid>(fixtures::free({"a", "b"}),
                                                  fixtures::free({"a"}), {w("a"), w("a")});
  auto const v = f.validate(4);
  EXPECT_TRUE(v.homomorphic);
  EXPECT_TRUE(v.surjective.holds());
}

TEST(Morphism, FreeOntoFm3) {
  auto const fm = fixtures::fm3();
  auto const f  = Morphism<FreeMonoid, FiniteMonoid>(fixtures::free({"a"}), fm, {1});
  auto const v  = f.validate(4);
  EXPECT_TRUE(v.homomorphic);
  EXPECT_EQ(v.surjective.kind, VerdictKind::holds_exhaustive);
  EXPECT_EQ(f.image_of_set({w("aaa"), w("aaaa")}), (std::vector<std::size_t>{2}));
}

TEST(Morphism, RelationViolationIsReported) {
  // a·a = E in the cyclic group but a·a ↦ z ≠ E in FM3.
  auto const f = Morphism<FiniteMonoid, FiniteMonoid>(fixtures::cyclic2(), fixtures::fm3(), {1});
  EXPECT_FALSE(f.validate().homomorphic);
}

TEST(Morphism, PartialMapIsRejected) {
  try {
    Morphism<FreeMonoid, FreeMonoid>(fixtures::free({"a", "b"}), fixtures::free({"a"}),
                                     {w("a")});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::partial_map);
  }
}
