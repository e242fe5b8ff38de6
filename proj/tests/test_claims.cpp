#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "monoid_ideals/claims.hpp"
#include "monoid_ideals/report.hpp"
#include "oracles.hpp"

using namespace monoid_ideals;

namespace {

  Instance free_instance(std::vector<std::string> names) {
    std::string id = "Free(";
    for (std::size_t i = 0; i < names.size(); ++i) {
      id += (i == 0 ? "" : ",") + names[i];
    }
    return {id + ")", fixtures::free(std::move(names))};
  }

  ClaimOptions small(std::size_t radius) {
    ClaimOptions o;
    o.radius = radius;
    return o;
  }

  json generated(std::vector<std::vector<std::string>> gens) {
    return json{{"kind", "generated"}, {"generators", gens}};
  }

  void expect_replays(ClaimReport const& r, Instance const& instance) {
    auto const replayed = replay(r, instance);
    EXPECT_TRUE(replayed.reproduced) << r.claim << " on " << r.instance << ": " << replayed.detail
                                     << "\n" << r.witness.dump();
  }

}  // namespace

TEST(Catalog, CountsAgreeWithBruteForce) {
  std::vector<std::size_t> const expected{1, 2, 7, 35};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const labelled = oracle::labelled_monoids(n);
    EXPECT_EQ(labelled_monoid_tables(n).size(), labelled.size());
    EXPECT_EQ(oracle::isomorphism_classes(labelled), expected[n - 1]);
    EXPECT_EQ(enumerate_finite_monoids(n).size(), expected[n - 1]);
  }
}

// The labelled count at order 5 is out of reach for the naive oracle; 228
// is the frozen count of monoids of order 5 up to isomorphism.
TEST(Catalog, OrderFive) {
  auto const five = enumerate_finite_monoids(5);
  EXPECT_EQ(five.size(), 228U);
  EXPECT_EQ(five.front().id, "M5.1");
  EXPECT_EQ(five.back().id, "M5.228");
}

TEST(Catalog, EntriesAreValidAndCanonical) {
  for (auto const& entry : enumerate_finite_monoids_up_to(4)) {
    auto const& t = entry.monoid->table();
    EXPECT_TRUE(oracle::associative(t));
    EXPECT_TRUE(FiniteMonoid::validate(entry.monoid->names(), 0, t, {}).monoid.has_value());
    EXPECT_EQ(canonical_table(t), t);
    EXPECT_EQ(canonical_table(canonical_table(t)), canonical_table(t));
  }
}

TEST(Catalog, OrderTooLarge) {
  try {
    enumerate_finite_monoids(6);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::order_too_large);
  }
}

TEST(ClaimTable, Lookup) {
  EXPECT_EQ(parse_claim_list("all").size(), claim_table().size());
  EXPECT_EQ(parse_claim_list("C1,C3"), (std::vector<std::string>{"C1", "C3"}));
  EXPECT_TRUE(claim_info("C3").existential);
  EXPECT_EQ(claim_info("C7").scope, ClaimScope::finite_only);
  try {
    claim_info("C99");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation_error);
  }
}

TEST(Claims, UniversalClaimsHoldOnSmallCatalog) {
  auto const instances = catalog_instances(3);
  for (auto const& claim : {"C1", "C2", "C4", "C5", "C6", "C8", "C13"}) {
    auto const result = mine({claim}, instances, small(0));
    EXPECT_TRUE(result.reports.empty()) << claim;
    EXPECT_EQ(result.runs, instances.size()) << claim;
  }
}

TEST(Claims, ConverseOfC1FailsOnSmallCatalog) {
  auto const instances = catalog_instances(3);
  auto const result    = mine({"C1_CONVERSE"}, instances, small(0));
  std::size_t found    = 0;
  for (auto const& r : result.reports) {
    if (r.kind == VerdictKind::fails) {
      ++found;
      EXPECT_EQ(r.status, "CONFIRMED");
      auto const it = std::find_if(instances.begin(), instances.end(),
                                   [&](Instance const& i) { return i.id == r.instance; });
      ASSERT_NE(it, instances.end());
      expect_replays(r, *it);
    }
  }
  EXPECT_GE(found, 1U);

  Instance const fm{"FM3", fixtures::fm3()};
  auto const     r = run_claim("C1_CONVERSE", fm, small(0));
  ASSERT_EQ(r.kind, VerdictKind::fails);
  EXPECT_EQ(r.witness.at("elements"), json::parse(R"(["a", "a"])"));
  EXPECT_EQ(r.witness.at("ideals")[0], json::parse(R"({"kind":"explicit","elements":["z"]})"));
}

TEST(Claims, IntersectionWitnessOnFreeMonoid) {
  auto const instance = free_instance({"a", "b"});
  auto const r        = run_claim("C3", instance, small(3));
  ASSERT_EQ(r.kind, VerdictKind::fails);
  EXPECT_EQ(r.status, "CONFIRMED");
  expect_replays(r, instance);

  // The pair I(ab), I(ba) with (a, b, a) is an equally valid witness.
  ClaimReport documented = r;
  documented.witness     = json{{"ideals", {generated({{"a", "b"}}), generated({{"b", "a"}})}},
                            {"elements", json::parse(R"([["a"], ["b"], ["a"]])")}};
  expect_replays(documented, instance);

  ClaimReport bogus = documented;
  bogus.witness["elements"] = json::parse(R"([["a"], ["a"], ["a"]])");
  EXPECT_FALSE(replay(bogus, instance).reproduced);
}

TEST(Claims, RandomPairSetsOnThreeLetters) {
  ClaimOptions o = small(3);
  o.samples      = 100;
  auto const r   = run_claim("C9", free_instance({"a", "b", "c"}), o);
  EXPECT_FALSE(r.kind == VerdictKind::fails) << r.witness.dump();
  EXPECT_EQ(r.cases, 100U);
}

TEST(Claims, SquaredSubsetsOnFreeMonoidsAndIdempotent) {
  for (auto names : {std::vector<std::string>{"a"}, std::vector<std::string>{"a", "b"}}) {
    auto const r = run_claim("C10", free_instance(names), small(4));
    EXPECT_TRUE(r.kind == VerdictKind::holds_up_to_bound) << r.witness.dump();
  }
  // With a·a = a the ideal I(Z·Z) = I(Z) is prime.
  Instance const idem{"idempotent", fixtures::idempotent2()};
  auto const     r = run_claim("C10", idem, small(0));
  ASSERT_EQ(r.kind, VerdictKind::fails);
  EXPECT_EQ(r.witness.at("part"), "I(Z·Z) not prime");
  expect_replays(r, idem);
}

TEST(Claims, AtomicScopeIsEnforced) {
  auto const big = std::make_shared<FiniteMonoid const>(
      FiniteMonoid::make({"E", "a", "z"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {1, 2}));
  for (auto const& claim : {"C9", "C10", "C11"}) {
    try {
      run_claim(claim, {"FM3+z", big}, small(0));
      FAIL() << claim;
    } catch (Error const& e) {
      EXPECT_EQ(e.code(), ErrorCode::scope_mismatch);
    }
  }
}

TEST(Claims, ScopeMismatch) {
  try {
    run_claim("C7", free_instance({"a"}), small(2));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::scope_mismatch);
  }
  try {
    run_claim("C12", {"FM3", fixtures::fm3()}, small(0));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::scope_mismatch);
  }
}

TEST(Claims, TopologyIsContinuousOnSmallMonoids) {
  for (auto const& instance : std::vector<Instance>{{"trivial", fixtures::trivial()},
                                                    {"FM3", fixtures::fm3()},
                                                    {"C2", fixtures::cyclic2()}}) {
    auto const r = run_claim("C13", instance, small(0));
    EXPECT_EQ(r.kind, VerdictKind::holds_exhaustive) << instance.id;
  }
}

TEST(Claims, EpimorphismsAreRecorded) {
  auto const result = mine({"C7"}, catalog_instances(3), small(0));
  EXPECT_EQ(result.runs, 10U);
  for (auto const& r : result.reports) {
    EXPECT_NE(r.kind, VerdictKind::inconclusive);
  }
}

TEST(Claims, CorollaryOnFreeMonoidOneLetter) {
  auto const instance = free_instance({"a"});
  auto const r        = run_claim("C12", instance, small(4));
  ASSERT_EQ(r.kind, VerdictKind::fails);
  EXPECT_EQ(r.status, "REFUTED");
  EXPECT_EQ(r.witness.at("part"), "second");
  expect_replays(r, instance);
}

TEST(Claims, PrimeCharacterisationOnFreeMonoids) {
  auto const r = run_claim("C11", free_instance({"a", "b"}), small(3));
  EXPECT_EQ(r.kind, VerdictKind::holds_up_to_bound) << r.witness.dump();
}

TEST(Claims, EveryFailureReplays) {
  auto const instances = catalog_instances(3);
  auto const result    = mine(parse_claim_list("all"), instances, small(0));
  for (auto const& r : result.reports) {
    if (r.kind != VerdictKind::fails) {
      continue;
    }
    auto const it = std::find_if(instances.begin(), instances.end(),
                                 [&](Instance const& i) { return i.id == r.instance; });
    ASSERT_NE(it, instances.end());
    expect_replays(r, *it);
  }
}

TEST(Claims, MiningIsDeterministic) {
  auto const instances = catalog_instances(3);
  auto dump            = [&] {
    json out = json::array();
    for (auto const& r : mine({"C1_CONVERSE", "C10", "C7"}, instances, small(0)).reports) {
      out.push_back(claim_report_json(r));
    }
    return out.dump();
  };
  EXPECT_EQ(dump(), dump());
}
