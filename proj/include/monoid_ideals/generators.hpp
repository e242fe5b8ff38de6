// Generator sets: atoms, the divisibility preorder, ideals generated by a
// subset Z of the generators or by the products of a pair set F, the
// strictly-smaller-pair condition, and the finite check of the prime
// characterisation by generators.

#ifndef MONOID_IDEALS_GENERATORS_HPP_
#define MONOID_IDEALS_GENERATORS_HPP_

#include <algorithm>      // for sort, find
#include <cstddef>        // for size_t
#include <memory>         // for shared_ptr
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "element_set.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "ideal_enumeration.hpp"
#include "ideal_set.hpp"
#include "predicates.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  namespace detail {
    template <MonoidEngine E>
    void require_generator(E const& engine, std::size_t s) {
      if (s >= engine.generator_count()) {
        throw Error(ErrorCode::unknown_element,
                    "generator index " + std::to_string(s) + " out of range");
      }
    }

    // Equal elements have equal length on free and homogeneous engines.
    template <MonoidEngine E>
    bool length_preserving(E const& engine) {
      if constexpr (is_free_engine_v<E>) {
        return true;
      } else if constexpr (is_presented_engine_v<E>) {
        return engine.homogeneous();
      } else {
        return false;
      }
    }

    template <MonoidEngine E>
    std::size_t element_length(element_of<E> const& x) {
      if constexpr (is_word_engine_v<E>) {
        return x.size();
      } else {
        return 0;
      }
    }
  }  // namespace detail

  //! A subset Z of the generators, by generator index.
  struct GeneratorSubset {
    std::vector<std::size_t> members;

    GeneratorSubset() = default;

    explicit GeneratorSubset(std::vector<std::size_t> m) : members(std::move(m)) {
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
    }
  };

  //! A set F of ordered generator pairs, by generator index.
  class GeneratorPairSet {
   public:
    using pair_type = std::pair<std::size_t, std::size_t>;

    GeneratorPairSet() = default;

    explicit GeneratorPairSet(std::vector<pair_type> pairs) : _pairs(std::move(pairs)) {
      std::sort(_pairs.begin(), _pairs.end());
      _pairs.erase(std::unique(_pairs.begin(), _pairs.end()), _pairs.end());
    }

    std::vector<pair_type> const& pairs() const noexcept {
      return _pairs;
    }

    bool empty() const noexcept {
      return _pairs.empty();
    }

    std::size_t size() const noexcept {
      return _pairs.size();
    }

    //! The characteristic function χ_F.
    int chi(std::size_t s1, std::size_t s2) const {
      return std::binary_search(_pairs.begin(), _pairs.end(), pair_type{s1, s2}) ? 1 : 0;
    }

   private:
    std::vector<pair_type> _pairs;
  };

  //! Checks that every factorisation u·v = s over the ball has u, v ∈ {E, s}.
  //! A witness is the first offending pair (u, v).
  template <MonoidEngine E>
  Verdict<element_of<E>> is_atom(E const& engine, std::size_t s, std::size_t radius) {
    detail::require_generator(engine, s);
    auto const  g    = engine.generator(s);
    auto const  ball = engine.ball(radius);
    auto const  id   = engine.identity();
    bool const  exhaustive
        = ball.exhaustive
          || (detail::length_preserving(engine) && radius >= detail::element_length<E>(g));
    UniversalCheck<element_of<E>> check(exhaustive, ball.radius);
    auto trivial = [&](element_of<E> const& x) { return x == id || x == g; };
    for (auto const& u : ball.elements) {
      for (auto const& v : ball.elements) {
        if (!(engine.multiply(u, v) == g)) {
          continue;
        }
        if (check.record(to_membership(trivial(u) && trivial(v)), {u, v})) {
          return check.finish();
        }
      }
    }
    return check.finish(exhaustive && !ball.exhaustive
                            ? "every factorisation is no longer than the generator"
                            : "");
  }

  //! x ⪯ y: some a in the ball has x·a = y or a·x = y.
  template <MonoidEngine E>
  bool divides(E const& engine, element_of<E> const& x, element_of<E> const& y,
               std::size_t radius) {
    for (auto const& a : engine.ball(radius).elements) {
      if (engine.multiply(x, a) == y || engine.multiply(a, x) == y) {
        return true;
      }
    }
    return false;
  }

  template <MonoidEngine E>
  struct DivisibilityRelation {
    std::shared_ptr<E const>          engine;
    std::vector<element_of<E>>        domain;
    std::size_t                       radius = 0;
    //! related[i][j] is domain[i] ⪯ domain[j] as defined (one witness a).
    std::vector<std::vector<bool>>    related;
    //! Transitive closure of related, reported separately.
    std::vector<std::vector<bool>>    closure;
    bool                              transitive = true;

    std::optional<std::size_t> index_of(element_of<E> const& x) const {
      auto it = std::find(domain.begin(), domain.end(), x);
      if (it == domain.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - domain.begin());
    }

    //! x ≺ y on the raw relation: x ⪯ y and not y ⪯ x.
    bool strictly_less(std::size_t i, std::size_t j) const {
      return related[i][j] && !related[j][i];
    }
  };

  template <MonoidEngine E>
  DivisibilityRelation<E> build_preorder(std::shared_ptr<E const>   engine,
                                         std::vector<element_of<E>> domain,
                                         std::size_t                radius) {
    for (auto const& x : domain) {
      require_element(*engine, x);
    }
    DivisibilityRelation<E> rel;
    rel.engine = engine;
    rel.radius = radius;
    rel.domain = std::move(domain);
    auto const n = rel.domain.size();
    rel.related.assign(n, std::vector<bool>(n, false));
    std::vector<std::pair<element_of<E>, std::size_t>> index;
    for (std::size_t j = 0; j < n; ++j) {
      index.emplace_back(rel.domain[j], j);
    }
    auto const ball = engine->ball(radius);
    for (std::size_t i = 0; i < n; ++i) {
      auto const& x = rel.domain[i];
      for (auto const& a : ball.elements) {
        auto const xa = engine->multiply(x, a);
        auto const ax = engine->multiply(a, x);
        for (auto const& [y, j] : index) {
          if (y == xa || y == ax) {
            rel.related[i][j] = true;
          }
        }
      }
    }
    rel.closure = rel.related;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!rel.closure[i][k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (rel.closure[k][j]) {
            rel.closure[i][j] = true;
          }
        }
      }
    }
    rel.transitive = rel.closure == rel.related;
    return rel;
  }

  template <MonoidEngine E>
  struct IdealClassification {
    IdealSet<E>            ideal;
    std::vector<element_of<E>> seed;
    Verdict<element_of<E>> prime;
    Verdict<element_of<E>> associative;
    //! Set when an associativity check on a pair-set ideal fails, which the
    //! pair-set theorem rules out.
    bool        contradiction = false;
    std::string note;
  };

  template <MonoidEngine E>
  IdealClassification<E> classify_seed(std::shared_ptr<E const>   engine,
                                       std::vector<element_of<E>> seed,
                                       std::size_t                radius) {
    auto ideal = IdealSet<E>::closure(engine, seed, radius);
    auto prime = is_prime(ideal, radius);
    auto assoc = is_associative(ideal, radius);
    return IdealClassification<E>{std::move(ideal), std::move(seed), std::move(prime),
                                  std::move(assoc), false, {}};
  }

  //! The seed Z, or Z·Z = {z₁z₂ : z₁, z₂ ∈ Z} when \p squared.
  template <MonoidEngine E>
  std::vector<element_of<E>> subset_seed(E const& engine, GeneratorSubset const& z, bool squared) {
    std::vector<element_of<E>> seed;
    for (auto s : z.members) {
      detail::require_generator(engine, s);
      if (!squared) {
        seed.push_back(engine.generator(s));
      }
    }
    if (squared) {
      for (auto s : z.members) {
        for (auto t : z.members) {
          seed.push_back(engine.multiply(engine.generator(s), engine.generator(t)));
        }
      }
    }
    sort_unique<E>(seed);
    return seed;
  }

  template <MonoidEngine E>
  IdealClassification<E> ideal_from_subset(std::shared_ptr<E const> engine,
                                           GeneratorSubset const&   z,
                                           bool                     squared,
                                           std::size_t              radius) {
    if (z.members.empty()) {
      throw Error(ErrorCode::empty_subset, "the generator subset Z is empty");
    }
    auto seed = subset_seed(*engine, z, squared);
    return classify_seed(std::move(engine), std::move(seed), radius);
  }

  template <MonoidEngine E>
  std::vector<element_of<E>> pair_seed(E const& engine, GeneratorPairSet const& f) {
    std::vector<element_of<E>> seed;
    for (auto const& [j, k] : f.pairs()) {
      detail::require_generator(engine, j);
      detail::require_generator(engine, k);
      seed.push_back(engine.multiply(engine.generator(j), engine.generator(k)));
    }
    sort_unique<E>(seed);
    return seed;
  }

  //! Q = I({s_j s_k : (s_j, s_k) ∈ F}).
  template <MonoidEngine E>
  IdealClassification<E> ideal_from_pairs(std::shared_ptr<E const> engine,
                                          GeneratorPairSet const&  f,
                                          std::size_t              radius) {
    if (f.empty()) {
      throw Error(ErrorCode::empty_pairset, "the pair set F is empty");
    }
    auto seed   = pair_seed(*engine, f);
    auto result = classify_seed(std::move(engine), std::move(seed), radius);
    if (result.associative.fails()) {
      result.contradiction = true;
      result.note = "contradiction: the ideal generated by the pair products is not associative";
    }
    return result;
  }

  //! ∀(s_j, s_k) ∈ F ∃(t_j, t_k) ∈ F: t_j ≺ s_j ∧ t_k ≺ s_k. The witness is
  //! the first pair without a strictly smaller one.
  template <MonoidEngine E>
  Verdict<element_of<E>> cauchy_condition(GeneratorPairSet const&        f,
                                          DivisibilityRelation<E> const& rel) {
    using V = Verdict<element_of<E>>;
    auto const&                                      engine = *rel.engine;
    std::vector<std::pair<std::size_t, std::size_t>> at;
    for (auto const& [j, k] : f.pairs()) {
      detail::require_generator(engine, j);
      detail::require_generator(engine, k);
      auto dj = rel.index_of(engine.generator(j));
      auto dk = rel.index_of(engine.generator(k));
      if (!dj || !dk) {
        throw Error(ErrorCode::incomplete_relation,
                    "the relation does not cover the generators of F");
      }
      at.emplace_back(*dj, *dk);
    }
    for (std::size_t p = 0; p < at.size(); ++p) {
      bool smaller = false;
      for (std::size_t q = 0; q < at.size() && !smaller; ++q) {
        smaller = rel.strictly_less(at[q].first, at[p].first)
                  && rel.strictly_less(at[q].second, at[p].second);
      }
      if (!smaller) {
        return V::failing({rel.domain[at[p].first], rel.domain[at[p].second]},
                          std::nullopt,
                          "no strictly smaller pair; on finite data only F = ∅ satisfies "
                          "the condition");
      }
    }
    return V::holding(true, std::nullopt);
  }

  template <MonoidEngine E>
  struct Theorem2Candidate {
    IdealSet<E>            ideal;
    std::string            label;
    //! Index into Theorem2Report::subsets when the ideal is I(Z).
    std::optional<std::size_t> subset_form;
    //! True when the ideal is generated by products s_j·s_k of generator
    //! pairs, that is Q = I(Q ∩ S·S).
    bool                   pair_form = false;
    Verdict<element_of<E>> prime;
    Verdict<element_of<E>> associative;
  };

  template <MonoidEngine E>
  struct Theorem2Report {
    std::vector<Verdict<element_of<E>>>        atoms;
    std::vector<GeneratorSubset>               subsets;
    std::vector<Theorem2Candidate<E>>          candidates;
    //! Candidates classified prime (HOLDS of either kind).
    std::vector<std::size_t>                   primes;
    //! Candidates of the form I(Z).
    std::vector<std::size_t>                   expected;
    std::vector<std::string>                   discrepancies;
    //! Associative candidates not generated by generator-pair products.
    std::vector<std::string>                   scope_notes;
    //! Associativity of I(Z·Z) for each subset Z.
    std::vector<Verdict<element_of<E>>>        square_associative;
    std::size_t                                undetermined = 0;
    bool                                       capped       = false;
    bool                                       agreement    = true;
    std::string condition1 = "NOT_APPLICABLE";
    std::string condition3 = "NOT_APPLICABLE";
  };

  struct Theorem2Options {
    std::size_t radius           = 3;
    std::size_t generator_radius = 3;
    std::size_t max_generators   = 2;
    std::size_t cap              = 100000;
  };

  //! Compares the ideals classified prime against {I(Z) : ∅ ≠ Z ⊆ S} over a
  //! finite candidate universe: every non-empty proper ideal of a finite
  //! engine, or on word engines every I(Z) together with the ideals
  //! generated by up to max_generators words of length up to
  //! generator_radius.
  template <MonoidEngine E>
  Theorem2Report<E> theorem2_check(std::shared_ptr<E const> engine, Theorem2Options const& o) {
    Theorem2Report<E> report;
    for (std::size_t s = 0; s < engine->generator_count(); ++s) {
      report.atoms.push_back(is_atom(*engine, s, std::max<std::size_t>(o.radius, 2)));
      if (report.atoms.back().fails()) {
        throw Error(ErrorCode::non_atomic_generators,
                    "generator " + engine->format(engine->generator(s)) + " is not an atom");
      }
    }
    for (auto& subset : nonempty_subsets(engine->generator_count())) {
      report.subsets.emplace_back(std::move(subset));
    }
    // Identify candidates by their exact element set (finite) or by their
    // minimal generators (word engines).
    std::vector<std::vector<element_of<E>>> subset_keys;
    auto key_of = [&](IdealSet<E> const& ideal) {
      if constexpr (is_finite_engine_v<E>) {
        return ideal.elements();
      } else {
        return minimal_generators(ideal).generators;
      }
    };
    for (auto const& z : report.subsets) {
      subset_keys.push_back(key_of(IdealSet<E>::closure(engine, subset_seed(*engine, z, false), o.radius)));
      auto squared = IdealSet<E>::closure(engine, subset_seed(*engine, z, true), o.radius);
      report.square_associative.push_back(is_associative(squared, o.radius));
    }

    std::vector<element_of<E>> all_pairs;
    for (std::size_t j = 0; j < engine->generator_count(); ++j) {
      for (std::size_t k = 0; k < engine->generator_count(); ++k) {
        all_pairs.push_back(engine->multiply(engine->generator(j), engine->generator(k)));
      }
    }
    sort_unique<E>(all_pairs);

    std::vector<IdealSet<E>> universe;
    if constexpr (is_finite_engine_v<E>) {
      for (auto& ideal : all_ideals(engine)) {
        if (!ideal.is_improper()) {
          universe.push_back(std::move(ideal));
        }
      }
    } else {
      for (auto const& z : report.subsets) {
        universe.push_back(IdealSet<E>::closure(engine, subset_seed(*engine, z, false), o.radius));
      }
      auto sets = antichain_generator_sets(engine,
                                           {o.generator_radius, o.max_generators, o.cap},
                                           o.radius);
      report.capped = sets.capped;
      for (auto& g : sets.sets) {
        universe.push_back(IdealSet<E>::closure(engine, std::move(g), o.radius));
      }
    }

    std::vector<std::vector<element_of<E>>> seen;
    for (auto& ideal : universe) {
      auto key = key_of(ideal);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
        continue;
      }
      seen.push_back(key);
      Theorem2Candidate<E> c{ideal, ideal.describe(), std::nullopt, false,
                             is_prime(ideal, o.radius), is_associative(ideal, o.radius)};
      for (std::size_t i = 0; i < report.subsets.size(); ++i) {
        if (!c.subset_form && subset_keys[i] == key) {
          c.subset_form = i;
        }
      }
      std::vector<element_of<E>> pair_products;
      for (auto const& x : all_pairs) {
        if (ideal.contains(x) == Membership::in) {
          pair_products.push_back(x);
        }
      }
      c.pair_form = !pair_products.empty()
                    && key_of(IdealSet<E>::closure(engine, pair_products, o.radius)) == key;
      auto const index = report.candidates.size();
      if (c.prime.holds()) {
        report.primes.push_back(index);
      }
      if (c.subset_form) {
        report.expected.push_back(index);
      }
      if (c.prime.kind == VerdictKind::inconclusive) {
        ++report.undetermined;
      } else if (c.prime.holds() && !c.subset_form) {
        report.discrepancies.push_back(c.label + " is prime but not generated by generators");
      } else if (!c.prime.holds() && c.subset_form) {
        report.discrepancies.push_back(c.label + " is generated by generators but not prime");
      }
      if (c.associative.holds() && !c.pair_form) {
        report.scope_notes.push_back(c.label
                                     + " is associative but not generated by products of "
                                       "generator pairs"
                                     + (c.subset_form ? " (it is generated by generators)" : ""));
      }
      report.candidates.push_back(std::move(c));
    }
    report.agreement = report.discrepancies.empty();
    return report;
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_GENERATORS_HPP_
