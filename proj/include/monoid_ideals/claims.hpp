// Executable checks of the propositions about associative ideals, a
// counterexample miner over catalogs of monoids, and witness replay.
//
// Universal claims are checked over a universe of ideals: every ideal of a
// finite monoid, or on word engines the empty ideal, M, every I(Z) for a
// subset Z of the generators, and the ideals generated by at most
// max_generators words of length at most generator_radius. Claims about
// pairs of ideals use generator words of length at most 2.
//
// Existential claims ("not necessarily ...") are miners: a witness makes
// the universal form FAIL and confirms the claim.

#ifndef MONOID_IDEALS_CLAIMS_HPP_
#define MONOID_IDEALS_CLAIMS_HPP_

#include <algorithm>  // for min, max, find
#include <atomic>     // for atomic
#include <chrono>     // for steady_clock
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <cstdlib>    // for getenv, strtoul
#include <functional> // for function
#include <memory>     // for shared_ptr
#include <optional>   // for optional
#include <random>     // for mt19937_64
#include <string>     // for string
#include <thread>     // for thread
#include <variant>    // for visit
#include <vector>     // for vector

#include "catalog.hpp"
#include "constructions.hpp"
#include "element_set.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "ideal_enumeration.hpp"
#include "io.hpp"
#include "predicates.hpp"
#include "topology.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  enum class ClaimScope { any, finite_only, word_only };

  inline std::string_view to_string(ClaimScope s) noexcept {
    switch (s) {
      case ClaimScope::any: return "ANY";
      case ClaimScope::finite_only: return "FINITE_ONLY";
      case ClaimScope::word_only: return "WORD_ONLY";
    }
    return "?";
  }

  struct ClaimInfo {
    std::string id;
    std::string statement;
    ClaimScope  scope       = ClaimScope::any;
    bool        existential = false;
  };

  inline std::vector<ClaimInfo> const& claim_table() {
    static std::vector<ClaimInfo> const table{
        {"C1", "every prime ideal is associative", ClaimScope::any, false},
        {"C1_CONVERSE", "some associative ideal is not prime", ClaimScope::any, true},
        {"C2", "the union of associative ideals is associative", ClaimScope::any, false},
        {"C3", "the intersection of associative ideals is not necessarily associative",
         ClaimScope::any, true},
        {"C4", "for associative Q and x, y, z not in Q: xyz ∉ Q iff xy ∉ Q and yz ∉ Q",
         ClaimScope::any, false},
        {"C5", "the complement of an associative ideal is strongly simple", ClaimScope::any,
         false},
        {"C6", "for associative ideals Q1 ⊆ Q2 the set Q2 − Q1 is associative",
         ClaimScope::any, false},
        {"C7", "epimorphisms map associative ideals to associative ideals",
         ClaimScope::finite_only, false},
        {"C8", "the product of two ideals is an ideal", ClaimScope::any, false},
        {"C9", "the products of any set of generator pairs generate an associative ideal",
         ClaimScope::any, false},
        {"C10", "I(Z) is prime, and I(Z·Z) is associative and not prime", ClaimScope::any,
         false},
        {"C11", "an ideal is prime iff it is generated by generators", ClaimScope::any, false},
        {"C12", "√P is associative iff P is prime, and P is associative iff P² is prime",
         ClaimScope::word_only, false},
        {"C13", "multiplication is continuous in the topology of associative ideals",
         ClaimScope::finite_only, false},
    };
    return table;
  }

  inline ClaimInfo const& claim_info(std::string const& id) {
    for (auto const& c : claim_table()) {
      if (c.id == id) {
        return c;
      }
    }
    throw Error(ErrorCode::validation_error, "unknown claim \"" + id + "\"");
  }

  //! "all" or a comma-separated list of claim ids.
  inline std::vector<std::string> parse_claim_list(std::string const& text) {
    std::vector<std::string> result;
    if (text == "all") {
      for (auto const& c : claim_table()) {
        result.push_back(c.id);
      }
      return result;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string::npos) {
        end = text.size();
      }
      auto id = text.substr(start, end - start);
      claim_info(id);
      if (std::find(result.begin(), result.end(), id) == result.end()) {
        result.push_back(id);
      }
      start = end + 1;
    }
    return result;
  }

  struct ClaimOptions {
    std::size_t radius = 6;
    //! Longest generator word of universe ideals; 0 means min(radius, 3).
    std::size_t generator_radius = 0;
    std::size_t max_generators   = 2;
    //! Random pair sets for C9 when there are too many to enumerate.
    std::size_t   samples = 100;
    std::uint64_t seed    = 0;
    bool          timing  = false;
    //! Largest √M ball used by C12; the radius is lowered to fit.
    std::size_t corollary_ball_cap = 100;
    //! Epimorphism targets for C7; empty means all catalog monoids of order
    //! at most min(|S|, 4).
    std::vector<CatalogEntry> targets;

    std::size_t effective_generator_radius() const {
      return generator_radius == 0 ? std::min<std::size_t>(radius, 3) : generator_radius;
    }
  };

  struct Instance {
    std::string id;
    AnyEngine   engine;
  };

  struct ClaimReport {
    std::string                claim;
    std::string                statement;
    std::string                instance;
    VerdictKind                kind = VerdictKind::inconclusive;
    std::optional<std::size_t> radius;
    //! CONFIRMED, REFUTED, NO_WITNESS or UNDETERMINED, relative to the
    //! claim as stated.
    std::string              status;
    json                     witness;
    std::vector<std::string> notes;
    //! Number of formula instances (ideals, pairs, maps) examined.
    std::size_t           cases = 0;
    std::optional<double> seconds;
  };

  template <typename T>
  Membership truth(Verdict<T> const& v) noexcept {
    return v.holds() ? Membership::in : v.fails() ? Membership::out : Membership::unknown;
  }

  namespace detail {
    class ClaimCheck {
     public:
      ClaimCheck(bool exhaustive, std::optional<std::size_t> radius)
          : _exhaustive(exhaustive), _radius(radius) {}

      template <typename WitnessFn>
      bool record(Membership m, WitnessFn&& witness) {
        ++_cases;
        if (m == Membership::out && !_failed) {
          _failed  = true;
          _witness = witness();
        } else if (m == Membership::unknown) {
          _unknown = true;
        }
        return _failed;
      }

      bool failed() const noexcept {
        return _failed;
      }

      void bounded() noexcept {
        _exhaustive = false;
      }

      void finish(ClaimInfo const& info, ClaimReport& r) const {
        r.radius = _radius;
        r.cases  = _cases;
        if (_failed) {
          r.kind    = VerdictKind::fails;
          r.witness = _witness;
          r.status  = info.existential ? "CONFIRMED" : "REFUTED";
        } else if (info.existential) {
          r.kind   = _exhaustive && !_unknown ? VerdictKind::holds_exhaustive
                                              : VerdictKind::inconclusive;
          r.status = "NO_WITNESS";
        } else if (_unknown) {
          r.kind   = VerdictKind::inconclusive;
          r.status = "UNDETERMINED";
        } else {
          r.kind = _exhaustive ? VerdictKind::holds_exhaustive : VerdictKind::holds_up_to_bound;
          r.status = "CONFIRMED";
        }
      }

     private:
      bool                       _exhaustive;
      std::optional<std::size_t> _radius;
      bool                       _failed  = false;
      bool                       _unknown = false;
      json                       _witness;
      std::size_t                _cases = 0;
    };

    [[noreturn]] inline void out_of_scope(std::string const& why) {
      throw Error(ErrorCode::scope_mismatch, why);
    }

    template <MonoidEngine E>
    class ClaimRunner {
     public:
      using element_type = element_of<E>;
      using verdict_type = Verdict<element_type>;

      ClaimRunner(std::shared_ptr<E const> engine, ClaimOptions const& options)
          : _engine(std::move(engine)), _o(options) {
        _radius = is_finite_engine_v<E> ? 0 : _o.radius;
      }

      ClaimReport run(ClaimInfo const& info) {
        ClaimReport r;
        r.claim     = info.id;
        r.statement = info.statement;
        ClaimCheck check(is_finite_engine_v<E>, verdict_radius());
        if (info.id == "C1") {
          c1(check);
        } else if (info.id == "C1_CONVERSE") {
          c1_converse(check);
        } else if (info.id == "C2") {
          c2(check);
        } else if (info.id == "C3") {
          c3(check);
        } else if (info.id == "C4" || info.id == "C5") {
          c4_c5(check, info.id == "C4");
        } else if (info.id == "C6") {
          c6(check);
        } else if (info.id == "C7") {
          c7(check);
        } else if (info.id == "C8") {
          c8(check, r);
        } else if (info.id == "C9") {
          c9(check, r);
        } else if (info.id == "C10") {
          c10(check);
        } else if (info.id == "C11") {
          c11(check, r);
        } else if (info.id == "C12") {
          c12(check, r);
        } else if (info.id == "C13") {
          c13(check, r);
        }
        check.finish(info, r);
        r.notes.insert(r.notes.begin(), _notes.begin(), _notes.end());
        return r;
      }

     private:
      struct Entry {
        IdealSet<E>                 ideal;
        std::optional<verdict_type> prime;
        std::optional<verdict_type> assoc;
      };

      std::optional<std::size_t> verdict_radius() const {
        if constexpr (is_finite_engine_v<E>) {
          return std::nullopt;
        } else {
          return _radius;
        }
      }

      std::vector<Entry> build_universe(std::size_t generator_radius) {
        std::vector<Entry> result;
        if constexpr (is_finite_engine_v<E>) {
          for (auto& ideal : all_ideals(_engine)) {
            result.push_back({std::move(ideal), {}, {}});
          }
        } else {
          std::vector<std::vector<element_type>> seeds{{}, {_engine->identity()}};
          for (auto const& z : nonempty_subsets(_engine->generator_count())) {
            seeds.push_back(subset_seed(*_engine, GeneratorSubset(z), false));
          }
          auto sets = antichain_generator_sets(
              _engine, {generator_radius, _o.max_generators, 100000}, _radius);
          if (sets.capped) {
            _notes.push_back("ideal universe capped at 100000 generating sets");
          }
          seeds.insert(seeds.end(), sets.sets.begin(), sets.sets.end());
          std::vector<std::vector<element_type>> keys;
          for (auto& seed : seeds) {
            auto ideal = IdealSet<E>::closure(_engine, seed, _radius);
            auto key   = ideal.is_full() == Membership::in
                             ? std::vector<element_type>{_engine->identity()}
                             : minimal_generators(ideal).generators;
            if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
              continue;
            }
            keys.push_back(std::move(key));
            result.push_back({std::move(ideal), {}, {}});
          }
        }
        return result;
      }

      std::vector<Entry>& universe() {
        if (!_universe) {
          _universe = build_universe(_o.effective_generator_radius());
        }
        return *_universe;
      }

      std::vector<Entry>& pair_universe() {
        if constexpr (is_finite_engine_v<E>) {
          return universe();
        } else {
          if (!_pair_universe) {
            _pair_universe
                = build_universe(std::min<std::size_t>(_o.effective_generator_radius(), 2));
          }
          return *_pair_universe;
        }
      }

      verdict_type const& prime(Entry& e) {
        if (!e.prime) {
          e.prime = is_prime(e.ideal, _radius);
        }
        return *e.prime;
      }

      verdict_type const& assoc(Entry& e) {
        if (!e.assoc) {
          e.assoc = is_associative(e.ideal, _radius);
        }
        return *e.assoc;
      }

      json ideals_json(std::initializer_list<IdealSet<E> const*> ideals) const {
        json result = json::array();
        for (auto const* i : ideals) {
          result.push_back(ideal_json(*i));
        }
        return result;
      }

      json witness(std::initializer_list<IdealSet<E> const*> ideals,
                   std::vector<element_type> const&             elements) const {
        return json{{"ideals", ideals_json(ideals)},
                    {"elements", elements_json(*_engine, elements)}};
      }

      // Union or intersection of two universe ideals, as an ideal.
      IdealSet<E> join(IdealSet<E> const& a, IdealSet<E> const& b) const {
        if constexpr (is_finite_engine_v<E>) {
          auto xs = a.elements();
          xs.insert(xs.end(), b.elements().begin(), b.elements().end());
          sort_unique<E>(xs);
          return IdealSet<E>::from_elements(_engine, std::move(xs));
        } else {
          auto gs = a.generators();
          gs.insert(gs.end(), b.generators().begin(), b.generators().end());
          return IdealSet<E>::closure(_engine, std::move(gs), _radius);
        }
      }

      // Q1 ⊆ Q2.
      Membership subset_of(IdealSet<E> const& a, IdealSet<E> const& b) const {
        if constexpr (is_finite_engine_v<E>) {
          for (auto x : a.elements()) {
            if (b.contains(x) != Membership::in) {
              return Membership::out;
            }
          }
          return Membership::in;
        } else {
          if (a.is_full() == Membership::in) {
            return b.is_full();
          }
          Membership result = Membership::in;
          for (auto const& g : a.generators()) {
            result = kleene_and(result, b.contains(g));
          }
          return result;
        }
      }

      void c1(ClaimCheck& check) {
        for (auto& e : universe()) {
          auto const& p = prime(e);
          if (p.fails()) {
            check.record(Membership::in, [] { return json(); });
            continue;
          }
          auto const& a = assoc(e);
          if (check.record(kleene_implies(truth(p), truth(a)),
                           [&] { return witness({&e.ideal}, a.witness); })) {
            return;
          }
        }
      }

      void c1_converse(ClaimCheck& check) {
        for (auto& e : universe()) {
          auto const& a = assoc(e);
          if (a.fails()) {
            check.record(Membership::in, [] { return json(); });
            continue;
          }
          auto const& p = prime(e);
          if (check.record(kleene_implies(truth(a), truth(p)),
                           [&] { return witness({&e.ideal}, p.witness); })) {
            return;
          }
        }
      }

      template <typename Body>
      void associative_pairs(ClaimCheck& check, bool distinct, Body&& body) {
        auto& u = pair_universe();
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (assoc(u[i]).fails()) {
            continue;
          }
          for (std::size_t j = distinct ? i + 1 : i; j < u.size(); ++j) {
            if (assoc(u[j]).fails()) {
              continue;
            }
            auto const premise = kleene_and(truth(assoc(u[i])), truth(assoc(u[j])));
            if (body(u[i], u[j], premise)) {
              return;
            }
          }
        }
        (void) check;
      }

      void c2(ClaimCheck& check) {
        associative_pairs(check, true, [&](Entry& a, Entry& b, Membership premise) {
          auto const u = join(a.ideal, b.ideal);
          auto const v = is_associative(u, _radius);
          return check.record(kleene_implies(premise, truth(v)),
                              [&] { return witness({&a.ideal, &b.ideal}, v.witness); });
        });
      }

      // Scans every pair and keeps the shortlex-least triple, so the witness
      // does not depend on the order of the universe.
      void c3(ClaimCheck& check) {
        typename E::element_less         less;
        std::optional<verdict_type>      best;
        std::pair<Entry*, Entry*>        best_pair{nullptr, nullptr};
        bool                             unknown = false;
        std::size_t                      cases   = 0;
        associative_pairs(check, true, [&](Entry& a, Entry& b, Membership premise) {
          ++cases;
          auto const set = ElementSet<E>::of(a.ideal) & ElementSet<E>::of(b.ideal);
          auto       v   = detail::associative_check(set, _radius);
          auto const m   = kleene_implies(premise, truth(v));
          if (m == Membership::unknown) {
            unknown = true;
          } else if (m == Membership::out
                     && (!best
                         || std::lexicographical_compare(v.witness.begin(), v.witness.end(),
                                                         best->witness.begin(),
                                                         best->witness.end(), less))) {
            best      = std::move(v);
            best_pair = {&a, &b};
          }
          return false;
        });
        for (std::size_t i = 1; i < cases; ++i) {
          check.record(Membership::in, [] { return json(); });
        }
        if (best) {
          check.record(Membership::out, [&] {
            return witness({&best_pair.first->ideal, &best_pair.second->ideal}, best->witness);
          });
        } else if (cases > 0) {
          check.record(unknown ? Membership::unknown : Membership::in, [] { return json(); });
        }
      }

      void c4_c5(ClaimCheck& check, bool c4) {
        for (auto& e : universe()) {
          auto const& a = assoc(e);
          if (a.fails()) {
            continue;
          }
          auto const sp = set_predicates(ElementSet<E>::of(e.ideal).complement(), _radius);
          auto const& v = c4 ? sp.associative_set : sp.strongly_simple;
          if (check.record(kleene_implies(truth(a), truth(v)),
                           [&] { return witness({&e.ideal}, v.witness); })) {
            return;
          }
        }
      }

      void c6(ClaimCheck& check) {
        auto& u = pair_universe();
        for (std::size_t i = 0; i < u.size(); ++i) {
          for (std::size_t j = 0; j < u.size(); ++j) {
            if (i == j || assoc(u[i]).fails() || assoc(u[j]).fails()) {
              continue;
            }
            auto const inside = subset_of(u[i].ideal, u[j].ideal);
            if (inside == Membership::out) {
              continue;
            }
            auto const premise = kleene_and(
                inside, kleene_and(truth(assoc(u[i])), truth(assoc(u[j]))));
            auto const diff = ElementSet<E>::of(u[j].ideal) - ElementSet<E>::of(u[i].ideal);
            auto const v    = set_predicates(diff, _radius).associative_set;
            if (check.record(kleene_implies(premise, truth(v)), [&] {
                  return witness({&u[i].ideal, &u[j].ideal}, v.witness);
                })) {
              return;
            }
          }
        }
      }

      void c7(ClaimCheck& check) {
        if constexpr (!is_finite_engine_v<E>) {
          out_of_scope("C7 enumerates epimorphisms between finite monoids");
        } else {
          auto const& s       = *_engine;
          auto        targets = _o.targets;
          if (targets.empty()) {
            targets = enumerate_finite_monoids_up_to(std::min<std::size_t>(s.size(), 4));
          }
          for (auto const& target : targets) {
            auto const& t = *target.monoid;
            if (t.size() > s.size()) {
              continue;
            }
            std::vector<std::size_t> f(s.size(), t.identity());
            // Odometer over the images of the non-identity elements.
            std::vector<std::size_t> free_elements;
            for (std::size_t x = 0; x < s.size(); ++x) {
              if (x != s.identity()) {
                free_elements.push_back(x);
              }
            }
            while (true) {
              if (is_epimorphism(s, t, f)) {
                for (auto& e : universe()) {
                  if (assoc(e).fails()) {
                    continue;
                  }
                  std::vector<std::size_t> image;
                  for (auto x : e.ideal.elements()) {
                    image.push_back(f[x]);
                  }
                  sort_unique<FiniteMonoid>(image);
                  auto const set = ElementSet<FiniteMonoid>::of_elements(target.monoid, image);
                  auto const iv  = is_ideal(set, 0);
                  auto const av  = iv.fails() ? iv : detail::associative_check(set, 0);
                  auto const m   = kleene_and(truth(iv), truth(av));
                  if (check.record(m, [&] {
                        json images = json::array();
                        for (auto y : f) {
                          images.push_back(t.name(y));
                        }
                        return json{{"target", {{"id", target.id}, {"monoid", serialize_monoid(t)}}},
                                    {"images", images},
                                    {"part", iv.fails() ? "ideal" : "associative"},
                                    {"ideals", ideals_json({&e.ideal})},
                                    {"elements", elements_json(t, av.witness)}};
                      })) {
                    return;
                  }
                }
              }
              std::size_t k = 0;
              for (; k < free_elements.size(); ++k) {
                auto& y = f[free_elements[k]];
                if (++y < t.size()) {
                  break;
                }
                y = 0;
              }
              if (k == free_elements.size()) {
                break;
              }
            }
          }
        }
      }

      static bool is_epimorphism(FiniteMonoid const& s, FiniteMonoid const& t,
                                 std::vector<std::size_t> const& f) {
        if (f[s.identity()] != t.identity()) {
          return false;
        }
        std::vector<bool> hit(t.size(), false);
        for (std::size_t x = 0; x < s.size(); ++x) {
          hit[f[x]] = true;
          for (std::size_t y = 0; y < s.size(); ++y) {
            if (f[s.multiply(x, y)] != t.multiply(f[x], f[y])) {
              return false;
            }
          }
        }
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      }

      void c8(ClaimCheck& check, ClaimReport& r) {
        r.notes.push_back("the identity {E} of the setwise product is itself an ideal only "
                          "in the trivial monoid, so the ideals are closed under the product "
                          "without forming a submonoid that shares its identity");
        std::size_t radius = _radius;
        if constexpr (is_word_engine_v<E>) {
          radius = std::min<std::size_t>(_radius, 4);
          if (radius < _radius) {
            r.notes.push_back("products checked on the radius " + std::to_string(radius)
                              + " ball");
          }
        }
        auto& u = pair_universe();
        for (auto& a : u) {
          for (auto& b : u) {
            auto const p = boolean_product(a.ideal, b.ideal, radius);
            if (check.record(truth(p.ideal),
                             [&] { return witness({&a.ideal, &b.ideal}, p.ideal.witness); })) {
              return;
            }
          }
        }
      }

      void require_atomic_generators() {
        for (std::size_t s = 0; s < _engine->generator_count(); ++s) {
          if (is_atom(*_engine, s, std::max<std::size_t>(_radius, 2)).fails()) {
            out_of_scope("generator " + _engine->format(_engine->generator(s))
                         + " is not an atom");
          }
        }
      }

      json pairs_json(GeneratorPairSet const& f) const {
        json result = json::array();
        for (auto const& [s, t] : f.pairs()) {
          result.push_back(json::array({_engine->generator_name(s), _engine->generator_name(t)}));
        }
        return result;
      }

      void c9(ClaimCheck& check, ClaimReport& r) {
        require_atomic_generators();
        auto const g = _engine->generator_count();
        std::vector<GeneratorPairSet::pair_type> all;
        for (std::size_t s = 0; s < g; ++s) {
          for (std::size_t t = 0; t < g; ++t) {
            all.emplace_back(s, t);
          }
        }
        auto from_mask = [&](auto const& bit) {
          std::vector<GeneratorPairSet::pair_type> pairs;
          for (std::size_t i = 0; i < all.size(); ++i) {
            if (bit(i)) {
              pairs.push_back(all[i]);
            }
          }
          return GeneratorPairSet(std::move(pairs));
        };
        std::vector<GeneratorPairSet> sets;
        if (all.size() < 63 && (std::uint64_t(1) << all.size()) - 1 <= _o.samples) {
          for (std::uint64_t m = 1; m < (std::uint64_t(1) << all.size()); ++m) {
            sets.push_back(from_mask([m](std::size_t i) { return (m >> i & 1U) != 0; }));
          }
          r.notes.push_back("all " + std::to_string(sets.size()) + " non-empty pair sets");
        } else {
          std::mt19937_64 rng(_o.seed);
          while (sets.size() < _o.samples) {
            std::vector<bool> bits(all.size());
            bool              any = false;
            for (std::size_t i = 0; i < all.size(); ++i) {
              bits[i] = (rng() & 1U) != 0;
              any     = any || bits[i];
            }
            if (any) {
              sets.push_back(from_mask([&bits](std::size_t i) { return bits[i]; }));
            }
          }
          r.notes.push_back(std::to_string(sets.size()) + " random pair sets, seed "
                            + std::to_string(_o.seed));
        }
        for (auto const& f : sets) {
          auto const q = IdealSet<E>::closure(_engine, pair_seed(*_engine, f), _radius);
          auto const v = is_associative(q, _radius);
          if (check.record(truth(v), [&] {
                return json{{"pairs", pairs_json(f)},
                            {"ideals", ideals_json({&q})},
                            {"elements", elements_json(*_engine, v.witness)}};
              })) {
            return;
          }
        }
      }

      void c10(ClaimCheck& check) {
        require_atomic_generators();
        for (auto const& members : nonempty_subsets(_engine->generator_count())) {
          GeneratorSubset z(members);
          auto const      iz  = IdealSet<E>::closure(_engine, subset_seed(*_engine, z, false), _radius);
          auto const      izz = IdealSet<E>::closure(_engine, subset_seed(*_engine, z, true), _radius);
          auto const      p1  = is_prime(iz, _radius);
          auto const      a2  = is_associative(izz, _radius);
          auto const      p2  = is_prime(izz, _radius);
          json            zs  = json::array();
          for (auto s : z.members) {
            zs.push_back(_engine->generator_name(s));
          }
          auto fail = [&](char const* part, IdealSet<E> const& q, verdict_type const& v) {
            return json{{"subset", zs},
                        {"part", part},
                        {"ideals", ideals_json({&q})},
                        {"elements", elements_json(*_engine, v.witness)}};
          };
          if (check.record(truth(p1), [&] { return fail("I(Z) prime", iz, p1); })
              || check.record(truth(a2), [&] { return fail("I(Z·Z) associative", izz, a2); })
              || check.record(kleene_not(truth(p2)),
                              [&] { return fail("I(Z·Z) not prime", izz, p2); })) {
            return;
          }
        }
      }

      void c11(ClaimCheck& check, ClaimReport& r) {
        require_atomic_generators();
        Theorem2Options t;
        t.radius           = _radius;
        t.generator_radius = _o.effective_generator_radius();
        t.max_generators   = _o.max_generators;
        auto const report  = theorem2_check(_engine, t);
        r.notes.push_back("conditions on infinite descending chains: NOT_APPLICABLE");
        for (auto const& n : report.scope_notes) {
          r.notes.push_back(n);
        }
        for (auto const& c : report.candidates) {
          auto const expected = c.subset_form ? Membership::in : Membership::out;
          auto const m        = kleene_iff(truth(c.prime), expected);
          if (check.record(m, [&] {
                return json{{"ideals", ideals_json({&c.ideal})},
                            {"part", c.prime.holds() ? "prime but not generated by generators"
                                                     : "generated by generators but not prime"},
                            {"elements", elements_json(*_engine, c.prime.witness)}};
              })) {
            return;
          }
        }
      }

      std::size_t corollary_radius() const {
        // Ball of √M grows with twice as many letters.
        auto const  letters = 2 * _engine->generator_count();
        std::size_t r = 0, size = 1, level = 1;
        while (r < _radius) {
          level *= letters;
          if (size + level > _o.corollary_ball_cap) {
            break;
          }
          size += level;
          ++r;
        }
        return std::max<std::size_t>(r, 2);
      }

      void c12(ClaimCheck& check, ClaimReport& r) {
        if constexpr (is_finite_engine_v<E>) {
          out_of_scope("C12 needs a free or confluent presented monoid");
        } else {
          if constexpr (is_presented_engine_v<E>) {
            if (!_engine->confluent()) {
              out_of_scope("C12 needs a confluent rewriting system");
            }
          }
          auto const radius = corollary_radius();
          check.bounded();
          if (radius < _radius) {
            r.notes.push_back("corollary checked at radius " + std::to_string(radius));
          }
          std::vector<std::vector<element_type>> seeds;
          for (auto const& z : nonempty_subsets(_engine->generator_count())) {
            seeds.push_back(subset_seed(*_engine, GeneratorSubset(z), false));
          }
          for (auto const& w : _engine->ball(std::min<std::size_t>(_radius, 2)).elements) {
            if (!(w == _engine->identity())) {
              seeds.push_back({w});
            }
          }
          std::vector<std::vector<element_type>> done;
          for (auto const& seed : seeds) {
            if (std::find(done.begin(), done.end(), seed) != done.end()) {
              continue;
            }
            done.push_back(seed);
            auto const p = IdealSet<E>::closure(_engine, seed, radius);
            auto const c = corollary_check(_engine, p, radius);
            auto       m = Membership::in;
            for (auto x : {c.first, c.second}) {
              m = kleene_and(m, x == Consistency::consistent ? Membership::in
                                : x == Consistency::violated ? Membership::out
                                                              : Membership::unknown);
            }
            if (check.record(m, [&] {
                  return json{
                      {"ideals", ideals_json({&p})},
                      {"radius", radius},
                      {"part", c.first == Consistency::violated ? "first" : "second"},
                      {"verdicts",
                       {{"prime(P)", to_string(c.prime_p.kind)},
                        {"associative(√P)", to_string(c.associative_root_p.kind)},
                        {"associative(P)", to_string(c.associative_p.kind)},
                        {"prime(P²)", to_string(c.prime_square_p.kind)}}}};
                })) {
              return;
            }
          }
        }
      }

      void c13(ClaimCheck& check, ClaimReport& r) {
        if constexpr (!is_finite_engine_v<E>) {
          out_of_scope("C13 needs a finite monoid");
        } else {
          r.notes.push_back("subbasis: the associative ideals together with ∅ and M");
          auto const t = topology_continuity(_engine);
          r.notes.push_back(std::to_string(t.opens.size()) + " open sets");
          check.record(to_membership(t.continuous), [&] {
            auto const& f = *t.failure;
            return json{{"open", elements_json(*_engine, mask_elements(f.open))},
                        {"elements", elements_json(*_engine, {f.x, f.y})}};
          });
        }
      }

      std::shared_ptr<E const> _engine;
      ClaimOptions const&      _o;
      std::size_t              _radius;
      std::vector<std::string> _notes;
      std::optional<std::vector<Entry>> _universe;
      std::optional<std::vector<Entry>> _pair_universe;
    };
  }  // namespace detail

  //! Runs one claim on one instance. Throws SCOPE_MISMATCH when the claim
  //! does not apply to the instance.
  inline ClaimReport run_claim(std::string const& id, Instance const& instance,
                               ClaimOptions const& options) {
    auto const& info  = claim_info(id);
    auto const  start = std::chrono::steady_clock::now();
    auto        report = std::visit(
        [&](auto const& engine) {
          using E = typename std::decay_t<decltype(*engine)>;
          if (info.scope == ClaimScope::finite_only && !is_finite_engine_v<E>) {
            detail::out_of_scope(info.id + " applies to finite monoids only");
          }
          if (info.scope == ClaimScope::word_only && is_finite_engine_v<E>) {
            detail::out_of_scope(info.id + " applies to free and presented monoids only");
          }
          return detail::ClaimRunner<E>(engine, options).run(info);
        },
        instance.engine);
    report.instance = instance.id;
    if (options.timing) {
      report.seconds
          = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
  }

  //! Worker threads for mine: MONOID_IDEALS_THREADS if set, otherwise the
  //! hardware concurrency.
  inline std::size_t worker_count() {
    std::size_t n = std::max<unsigned>(std::thread::hardware_concurrency(), 1);
    if (auto const* env = std::getenv("MONOID_IDEALS_THREADS")) {
      auto cap = std::strtoul(env, nullptr, 10);
      if (cap > 0) {
        n = std::min<std::size_t>(n, cap);
      }
    }
    return n;
  }

  struct MineResult {
    //! FAILS and INCONCLUSIVE reports, ordered by claim and then instance.
    std::vector<ClaimReport> reports;
    std::size_t              runs    = 0;
    std::size_t              skipped = 0;
  };

  //! Runs every claim on every instance it applies to and keeps the reports
  //! that did not hold.
  inline MineResult mine(std::vector<std::string> const& claims,
                         std::vector<Instance> const&    instances,
                         ClaimOptions const&             options) {
    struct Task {
      std::size_t                claim, instance;
      std::optional<ClaimReport> report;
      std::exception_ptr         error;
    };
    std::vector<Task> tasks;
    for (std::size_t c = 0; c < claims.size(); ++c) {
      claim_info(claims[c]);
      for (std::size_t i = 0; i < instances.size(); ++i) {
        tasks.push_back({c, i, std::nullopt, nullptr});
      }
    }
    std::atomic<std::size_t> next{0};
    auto                     work = [&] {
      for (auto k = next++; k < tasks.size(); k = next++) {
        auto& t = tasks[k];
        try {
          t.report = run_claim(claims[t.claim], instances[t.instance], options);
        } catch (Error const& e) {
          if (e.code() != ErrorCode::scope_mismatch) {
            t.error = std::current_exception();
          }
        } catch (...) {
          t.error = std::current_exception();
        }
      }
    };
    auto const               n = std::min(worker_count(), tasks.size());
    std::vector<std::thread> threads;
    for (std::size_t i = 1; i < n; ++i) {
      threads.emplace_back(work);
    }
    work();
    for (auto& t : threads) {
      t.join();
    }
    MineResult result;
    for (auto& t : tasks) {
      if (t.error) {
        std::rethrow_exception(t.error);
      }
      if (!t.report) {
        ++result.skipped;
        continue;
      }
      ++result.runs;
      if (t.report->kind == VerdictKind::fails || t.report->kind == VerdictKind::inconclusive) {
        result.reports.push_back(std::move(*t.report));
      }
    }
    return result;
  }

  //! Every catalog monoid of order up to \p order as an instance.
  inline std::vector<Instance> catalog_instances(std::size_t order) {
    std::vector<Instance> result;
    for (auto& e : enumerate_finite_monoids_up_to(order)) {
      result.push_back({e.id, e.monoid});
    }
    return result;
  }

  struct ReplayResult {
    bool        reproduced = false;
    std::string detail;
  };

  namespace detail {
    template <MonoidEngine E>
    class Replayer {
     public:
      using element_type = element_of<E>;

      Replayer(std::shared_ptr<E const> engine, ClaimReport const& r)
          : _engine(std::move(engine)), _r(r), _radius(r.radius.value_or(0)) {}

      ReplayResult run() {
        auto const& id = _r.claim;
        if (id == "C1") {
          auto q = ideal(0);
          auto [a, b, c] = triple();
          return result(is_prime(q, _radius).holds() && in(q, mul(a, b, c)) && !in(q, mul(a, b))
                            && !in(q, mul(b, c)),
                        "prime ideal with abc ∈ Q, ab ∉ Q, bc ∉ Q");
        }
        if (id == "C1_CONVERSE") {
          auto q = ideal(0);
          auto a = element(0), b = element(1);
          return result(is_associative(q, _radius).holds() && in(q, mul(a, b)) && !in(q, a)
                            && !in(q, b),
                        "associative ideal with ab ∈ Q, a ∉ Q, b ∉ Q");
        }
        if (id == "C2" || id == "C3") {
          auto q1 = ideal(0), q2 = ideal(1);
          auto member = [&](element_type const& x) {
            return id == "C2" ? (in(q1, x) || in(q2, x)) : (in(q1, x) && in(q2, x));
          };
          auto [a, b, c] = triple();
          return result(is_associative(q1, _radius).holds() && is_associative(q2, _radius).holds()
                            && member(mul(a, b, c)) && !member(mul(a, b)) && !member(mul(b, c)),
                        "abc in the set, ab and bc outside it");
        }
        if (id == "C4") {
          auto q         = ideal(0);
          auto [x, y, z] = triple();
          bool const lhs = !in(q, mul(x, y, z));
          bool const rhs = !in(q, mul(x, y)) && !in(q, mul(y, z));
          return result(is_associative(q, _radius).holds() && !in(q, x) && !in(q, y) && !in(q, z)
                            && lhs != rhs,
                        "xyz ∉ Q differs from xy ∉ Q ∧ yz ∉ Q");
        }
        if (id == "C5") {
          auto q = ideal(0);
          auto x = element(0), y = element(1);
          return result(is_associative(q, _radius).holds() && !in(q, mul(x, y))
                            && (in(q, x) || in(q, y)),
                        "xy ∉ Q while x or y ∈ Q");
        }
        if (id == "C6") {
          auto q1 = ideal(0), q2 = ideal(1);
          auto d  = [&](element_type const& x) { return in(q2, x) && !in(q1, x); };
          auto [x, y, z] = triple();
          return result(d(x) && d(y) && d(z) && (d(mul(x, y, z)) != (d(mul(x, y)) && d(mul(y, z)))),
                        "the triple breaks the associative-set equivalence on Q2 − Q1");
        }
        if (id == "C8") {
          return replay_c8();
        }
        if (id == "C9") {
          auto q         = ideal(0);
          auto [a, b, c] = triple();
          return result(in(q, mul(a, b, c)) && !in(q, mul(a, b)) && !in(q, mul(b, c)),
                        "abc ∈ Q, ab ∉ Q, bc ∉ Q");
        }
        if (id == "C10") {
          auto const q    = ideal(0);
          auto const part = _r.witness.at("part").get<std::string>();
          if (part == "I(Z·Z) not prime") {
            return result(is_prime(q, _radius).holds(), "I(Z·Z) is prime");
          }
          if (part == "I(Z) prime") {
            auto a = element(0), b = element(1);
            return result(in(q, mul(a, b)) && !in(q, a) && !in(q, b), "ab ∈ I(Z), a, b ∉ I(Z)");
          }
          auto [a, b, c] = triple();
          return result(in(q, mul(a, b, c)) && !in(q, mul(a, b)) && !in(q, mul(b, c)),
                        "abc ∈ I(Z·Z), ab, bc ∉ I(Z·Z)");
        }
        if (id == "C11") {
          auto const q      = ideal(0);
          bool const prime  = is_prime(q, _radius).holds();
          bool       subset = false;
          auto const key    = minimal_key(q);
          for (auto const& z : nonempty_subsets(_engine->generator_count())) {
            auto iz = IdealSet<E>::closure(_engine, subset_seed(*_engine, GeneratorSubset(z), false),
                                           _radius);
            subset  = subset || minimal_key(iz) == key;
          }
          return result(prime != subset, "primality disagrees with being generated by generators");
        }
        if (id == "C12") {
          if constexpr (is_word_engine_v<E>) {
            auto const radius = _r.witness.at("radius").get<std::size_t>();
            auto const p      = IdealSet<E>::closure(_engine, ideal(0).generators(), radius);
            auto const c      = corollary_check(_engine, p, radius);
            auto const which  = _r.witness.at("part").get<std::string>() == "first" ? c.first
                                                                                   : c.second;
            return result(which == Consistency::violated, "the biconditional is violated");
          }
        }
        if (id == "C7" || id == "C13") {
          if constexpr (is_finite_engine_v<E>) {
            return id == "C7" ? replay_c7() : replay_c13();
          }
        }
        return {false, "no replay for " + id};
      }

     private:
      ReplayResult result(bool ok, std::string const& what) const {
        return {ok, ok ? "reproduced: " + what : "not reproduced: " + what};
      }

      IdealSet<E> ideal(std::size_t i) const {
        return parse_ideal(_engine, _r.witness.at("ideals").at(i), _radius).ideal;
      }

      element_type element(std::size_t i) const {
        return parse_element(*_engine, _r.witness.at("elements").at(i), "/elements");
      }

      std::tuple<element_type, element_type, element_type> triple() const {
        return {element(0), element(1), element(2)};
      }

      element_type mul(element_type const& x, element_type const& y) const {
        return _engine->multiply(x, y);
      }

      element_type mul(element_type const& x, element_type const& y, element_type const& z) const {
        return _engine->multiply(_engine->multiply(x, y), z);
      }

      static bool in(IdealSet<E> const& q, element_type const& x) {
        return q.contains(x) == Membership::in;
      }

      std::vector<element_type> minimal_key(IdealSet<E> const& q) const {
        if constexpr (is_finite_engine_v<E>) {
          return q.elements();
        } else {
          return minimal_generators(q).generators;
        }
      }

      ReplayResult replay_c8() const {
        auto a = ideal(0), b = ideal(1);
        if constexpr (is_finite_engine_v<E>) {
          auto const ab = boolean_product(*_engine, a.elements(), b.elements());
          auto       in_ab = [&](std::size_t x) {
            return std::binary_search(ab.begin(), ab.end(), x);
          };
          auto x = element(0), y = element(1);
          return result((in_ab(x) || in_ab(y)) && !in_ab(mul(x, y)),
                        "a product leaves A·B");
        } else {
          auto x = element(0), y = element(1), m = element(2);
          return result(!in(b, mul(y, m)) || !in(a, mul(m, x)), "bm ∉ B or ma ∉ A");
        }
      }

      ReplayResult replay_c7() const {
        auto const& w      = _r.witness;
        auto        target = std::get<std::shared_ptr<FiniteMonoid const>>(
            parse_monoid(w.at("target").at("monoid")));
        auto const& s = *_engine;
        std::vector<std::size_t> f;
        for (auto const& name : w.at("images")) {
          f.push_back(parse_element(*target, name, "/images"));
        }
        if (f.size() != s.size()) {
          return {false, "image list has the wrong length"};
        }
        for (std::size_t x = 0; x < s.size(); ++x) {
          for (std::size_t y = 0; y < s.size(); ++y) {
            if (f[s.multiply(x, y)] != target->multiply(f[x], f[y])) {
              return {false, "not reproduced: the map is not a homomorphism"};
            }
          }
        }
        std::vector<std::size_t> image;
        for (auto x : ideal(0).elements()) {
          image.push_back(f[x]);
        }
        sort_unique<FiniteMonoid>(image);
        auto in_image = [&](std::size_t x) {
          return std::binary_search(image.begin(), image.end(), x);
        };
        auto const& es = w.at("elements");
        auto        el = [&](std::size_t i) { return parse_element(*target, es.at(i), "/elements"); };
        if (w.at("part") == "ideal") {
          auto x = el(0), y = el(1);
          return result((in_image(x) || in_image(y)) && !in_image(target->multiply(x, y)),
                        "the image is not an ideal");
        }
        auto a = el(0), b = el(1), c = el(2);
        auto t = [&](std::size_t x, std::size_t y) { return target->multiply(x, y); };
        return result(a != target->identity() && b != target->identity()
                          && c != target->identity() && in_image(t(t(a, b), c))
                          && !in_image(t(a, b)) && !in_image(t(b, c)),
                      "abc ∈ f(Q), ab, bc ∉ f(Q)");
      }

      ReplayResult replay_c13() const {
        auto const   t    = topology_continuity(_engine);
        element_mask open = 0;
        for (auto const& x : _r.witness.at("open")) {
          open |= element_mask(1) << parse_element(*_engine, x, "/open");
        }
        auto x = element(0), y = element(1);
        bool const is_open = std::find(t.opens.begin(), t.opens.end(), open) != t.opens.end();
        bool       escapes = false;
        for (auto x2 : mask_elements(t.neighbourhood[x])) {
          for (auto y2 : mask_elements(t.neighbourhood[y])) {
            escapes = escapes || !(open >> mul(x2, y2) & 1U);
          }
        }
        return result(is_open && (open >> mul(x, y) & 1U) && escapes,
                      "the preimage of an open set is not open at (x, y)");
      }

      std::shared_ptr<E const> _engine;
      ClaimReport const&       _r;
      std::size_t              _radius;
    };
  }  // namespace detail

  //! Re-evaluates the formula of a FAILS report on its stored witness.
  inline ReplayResult replay(ClaimReport const& report, Instance const& instance) {
    if (report.kind != VerdictKind::fails) {
      return {false, "only FAILS reports carry a witness"};
    }
    return std::visit(
        [&](auto const& engine) {
          using E = typename std::decay_t<decltype(*engine)>;
          return detail::Replayer<E>(engine, report).run();
        },
        instance.engine);
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_CLAIMS_HPP_
