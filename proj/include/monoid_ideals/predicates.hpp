// The ideal predicates: two-sided ideal, prime, associative, and the
// complement-set properties, each as a bounded universal check.
//
// Quantifiers range over the engine's radius ball. A counterexample is only
// reported when every membership it relies on is decided; undecided
// memberships make a check INCONCLUSIVE instead. Over a ball that is not
// exhaustive a passing check is HOLDS_UP_TO_BOUND, never HOLDS_EXHAUSTIVE.
// Witnesses are the first failing tuple in ball order.

#ifndef MONOID_IDEALS_PREDICATES_HPP_
#define MONOID_IDEALS_PREDICATES_HPP_

#include <cstddef>   // for size_t
#include <memory>    // for make_shared
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "element_set.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "ideal_set.hpp"
#include "product_machine.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  //! Least ideal containing \p seed; see IdealSet::closure.
  template <MonoidEngine E>
  IdealSet<E> ideal_closure(std::shared_ptr<E const>   engine,
                            std::vector<element_of<E>> seed,
                            std::size_t                radius) {
    return IdealSet<E>::closure(std::move(engine), std::move(seed), radius);
  }

  namespace detail {
    template <typename TElement>
    std::vector<std::size_t> non_identity_indices(ElementBall<TElement> const& ball,
                                                  TElement const&              identity,
                                                  bool exclude_identity = true) {
      std::vector<std::size_t> result;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        if (!exclude_identity || !(ball.elements[i] == identity)) {
          result.push_back(i);
        }
      }
      return result;
    }
  }  // namespace detail

  //! ∀q ∈ S ∀m: qm ∈ S ∧ mq ∈ S. A witness (x, y) has x or y in S and
  //! x·y outside it.
  template <MonoidEngine E>
  Verdict<element_of<E>> is_ideal(ElementSet<E> const& set, std::size_t radius) {
    auto const                    ball = set.engine().ball(radius);
    ProductMachine<E>             machine(set, ball);
    UniversalCheck<element_of<E>> check(ball.exhaustive, ball.radius);
    auto const                    start = machine.start();
    for (std::size_t q = 0; q < ball.size(); ++q) {
      auto const sq = machine.step(start, q);
      auto const mq = machine.accept(sq);
      if (mq == Membership::out) {
        continue;
      }
      for (std::size_t m = 0; m < ball.size(); ++m) {
        auto const right = machine.accept(machine.step(sq, m));
        if (check.record(kleene_implies(mq, right), {ball.elements[q], ball.elements[m]})) {
          return check.finish();
        }
        auto const left = machine.accept(machine.step(machine.step(start, m), q));
        if (check.record(kleene_implies(mq, left), {ball.elements[m], ball.elements[q]})) {
          return check.finish();
        }
      }
    }
    return check.finish();
  }

  template <MonoidEngine E>
  Verdict<element_of<E>> is_ideal(IdealSet<E> const& ideal, std::size_t radius) {
    auto v = is_ideal(ElementSet<E>::of(ideal), radius);
    if (v.kind == VerdictKind::inconclusive) {
      // Membership is bounded, but M·G·M is closed by construction.
      return Verdict<element_of<E>>::holding(true, std::nullopt);
    }
    return v;
  }

  namespace detail {
    template <MonoidEngine E>
    void require_ideal(ElementSet<E> const& set, std::size_t radius) {
      auto v = is_ideal(set, radius);
      if (v.fails()) {
        throw Error(ErrorCode::not_an_ideal,
                    set.describe() + " is not closed: " + set.engine().format(v.witness[0])
                        + "·" + set.engine().format(v.witness[1]) + " escapes");
      }
    }

    template <MonoidEngine E>
    Verdict<element_of<E>> prime_check(ElementSet<E> const& set, std::size_t radius) {
      auto const                    ball = set.engine().ball(radius);
      ProductMachine<E>             machine(set, ball);
      UniversalCheck<element_of<E>> check(ball.exhaustive, ball.radius);
      auto const                    start = machine.start();
      for (std::size_t a = 0; a < ball.size(); ++a) {
        auto const sa = machine.step(start, a);
        auto const ma = machine.accept(sa);
        if (ma == Membership::in) {
          continue;
        }
        for (std::size_t b = 0; b < ball.size(); ++b) {
          auto const mb = machine.accept(machine.step(start, b));
          if (mb == Membership::in) {
            continue;
          }
          auto const mab = machine.accept(machine.step(sa, b));
          if (check.record(kleene_implies(mab, kleene_or(ma, mb)),
                           {ball.elements[a], ball.elements[b]})) {
            return check.finish();
          }
        }
      }
      return check.finish();
    }

    template <MonoidEngine E>
    Verdict<element_of<E>> associative_check(ElementSet<E> const& set, std::size_t radius) {
      auto const                    ball = set.engine().ball(radius);
      ProductMachine<E>             machine(set, ball);
      UniversalCheck<element_of<E>> check(ball.exhaustive, ball.radius);
      auto const                    start = machine.start();
      auto const nonid = non_identity_indices(ball, set.engine().identity());
      for (auto a : nonid) {
        auto const sa = machine.step(start, a);
        for (auto b : nonid) {
          auto const sab = machine.step(sa, b);
          auto const mab = machine.accept(sab);
          if (mab == Membership::in) {
            continue;
          }
          auto const sb = machine.step(start, b);
          for (auto c : nonid) {
            auto const mbc = machine.accept(machine.step(sb, c));
            if (mbc == Membership::in) {
              continue;
            }
            auto const mabc = machine.accept(machine.step(sab, c));
            if (check.record(kleene_implies(mabc, kleene_or(mab, mbc)),
                             {ball.elements[a], ball.elements[b], ball.elements[c]})) {
              return check.finish();
            }
          }
        }
      }
      return check.finish();
    }

    template <MonoidEngine E>
    Verdict<element_of<E>> associative_set_check(ElementSet<E> const& set,
                                                 std::size_t          radius,
                                                 bool                 exclude_identity) {
      auto const                    ball = set.engine().ball(radius);
      ProductMachine<E>             machine(set, ball);
      UniversalCheck<element_of<E>> check(ball.exhaustive, ball.radius);
      auto const                    start = machine.start();
      auto const dom = non_identity_indices(ball, set.engine().identity(), exclude_identity);
      for (auto x : dom) {
        auto const sx = machine.step(start, x);
        auto const mx = machine.accept(sx);
        if (mx == Membership::out) {
          continue;
        }
        for (auto y : dom) {
          auto const sy = machine.step(start, y);
          auto const my = machine.accept(sy);
          if (my == Membership::out) {
            continue;
          }
          auto const sxy = machine.step(sx, y);
          auto const mxy = machine.accept(sxy);
          for (auto z : dom) {
            auto const mz = machine.accept(machine.step(start, z));
            if (mz == Membership::out) {
              continue;
            }
            auto const myz      = machine.accept(machine.step(sy, z));
            auto const mxyz     = machine.accept(machine.step(sxy, z));
            auto const in_scope = kleene_and(mx, kleene_and(my, mz));
            auto const formula  = kleene_iff(mxyz, kleene_and(mxy, myz));
            if (check.record(kleene_implies(in_scope, formula),
                             {ball.elements[x], ball.elements[y], ball.elements[z]})) {
              return check.finish();
            }
          }
        }
      }
      return check.finish();
    }

    template <MonoidEngine E>
    Verdict<element_of<E>> strongly_simple_check(ElementSet<E> const& set,
                                                 std::size_t          radius,
                                                 bool                 exclude_identity) {
      auto const                    ball = set.engine().ball(radius);
      ProductMachine<E>             machine(set, ball);
      UniversalCheck<element_of<E>> check(ball.exhaustive, ball.radius);
      auto const                    start = machine.start();
      auto const dom = non_identity_indices(ball, set.engine().identity(), exclude_identity);
      for (auto x : dom) {
        auto const sx = machine.step(start, x);
        auto const mx = machine.accept(sx);
        for (auto y : dom) {
          auto const my  = machine.accept(machine.step(start, y));
          auto const mxy = machine.accept(machine.step(sx, y));
          if (check.record(kleene_implies(mxy, kleene_and(mx, my)),
                           {ball.elements[x], ball.elements[y]})) {
            return check.finish();
          }
        }
      }
      return check.finish();
    }
  }  // namespace detail

  //! ∀a, b: ab ∈ P ⇒ a ∈ P ∨ b ∈ P. Throws NOT_AN_IDEAL when the set fails
  //! the ideal check.
  template <MonoidEngine E>
  Verdict<element_of<E>> is_prime(ElementSet<E> const& set, std::size_t radius) {
    detail::require_ideal(set, radius);
    return detail::prime_check(set, radius);
  }

  template <MonoidEngine E>
  Verdict<element_of<E>> is_prime(IdealSet<E> const& ideal, std::size_t radius) {
    return detail::prime_check(ElementSet<E>::of(ideal), radius);
  }

  //! ∀a, b, c ≠ E: abc ∈ Q ⇒ ab ∈ Q ∨ bc ∈ Q. Throws NOT_AN_IDEAL when the
  //! set fails the ideal check.
  template <MonoidEngine E>
  Verdict<element_of<E>> is_associative(ElementSet<E> const& set, std::size_t radius) {
    detail::require_ideal(set, radius);
    return detail::associative_check(set, radius);
  }

  template <MonoidEngine E>
  Verdict<element_of<E>> is_associative(IdealSet<E> const& ideal, std::size_t radius) {
    return detail::associative_check(ElementSet<E>::of(ideal), radius);
  }

  template <typename TElement>
  struct SetPredicates {
    //! x, y, z ∈ S, all ≠ E: xyz ∈ S ⇔ (xy ∈ S ∧ yz ∈ S).
    Verdict<TElement> associative_set;
    //! x, y ≠ E: xy ∈ S ⇒ x ∈ S ∧ y ∈ S.
    Verdict<TElement> strongly_simple;
  };

  //! Both checks exclude the identity from the quantifiers. Each is also run
  //! with the identity included, and a note is attached when that changes
  //! the verdict kind.
  template <MonoidEngine E>
  SetPredicates<element_of<E>> set_predicates(ElementSet<E> const& set, std::size_t radius) {
    SetPredicates<element_of<E>> result;
    auto annotate = [](auto& excluded, auto const& included) {
      if (excluded.kind != included.kind) {
        auto note = std::string("identity exclusion changes the verdict: with E in "
                                "the quantifiers it is ")
                    + std::string(to_string(included.kind));
        excluded.note = excluded.note.empty() ? note : excluded.note + "; " + note;
      }
    };
    result.associative_set = detail::associative_set_check(set, radius, true);
    annotate(result.associative_set, detail::associative_set_check(set, radius, false));
    result.strongly_simple = detail::strongly_simple_check(set, radius, true);
    annotate(result.strongly_simple, detail::strongly_simple_check(set, radius, false));
    return result;
  }

  enum class SetOp { set_union, intersection, difference };

  inline std::string_view to_string(SetOp op) noexcept {
    switch (op) {
      case SetOp::set_union: return "UNION";
      case SetOp::intersection: return "INTERSECTION";
      case SetOp::difference: return "DIFFERENCE";
    }
    return "?";
  }

  template <MonoidEngine E>
  struct SetAlgebraResult {
    ElementSet<E>                         set;
    Verdict<element_of<E>>                ideal;
    //! Only computed when the ideal check does not fail.
    std::optional<Verdict<element_of<E>>> associative;
    SetPredicates<element_of<E>>          predicates;
    //! Inclusions A ⊆ B and B ⊆ A over the checked ball (difference only).
    std::optional<Membership> a_in_b;
    std::optional<Membership> b_in_a;
  };

  //! ∀x in the ball: x ∈ A ⇒ x ∈ B.
  template <MonoidEngine E>
  Membership included_on_ball(ElementSet<E> const& a, ElementSet<E> const& b, std::size_t radius) {
    Membership result = Membership::in;
    for (auto const& x : a.engine().ball(radius).elements) {
      result = kleene_and(result, kleene_implies(a.contains(x), b.contains(x)));
      if (result == Membership::out) {
        break;
      }
    }
    return result;
  }

  template <MonoidEngine E>
  SetAlgebraResult<E> set_algebra(SetOp              op,
                                  IdealSet<E> const& a,
                                  IdealSet<E> const& b,
                                  std::size_t        radius) {
    if (a.engine_ptr() != b.engine_ptr()) {
      throw Error(ErrorCode::engine_mismatch, "ideals belong to different engines");
    }
    auto const sa  = ElementSet<E>::of(a);
    auto const sb  = ElementSet<E>::of(b);
    auto       set = op == SetOp::set_union      ? (sa | sb)
                     : op == SetOp::intersection ? (sa & sb)
                                                 : (sa - sb);
    SetAlgebraResult<E> result{set, is_ideal(set, radius), std::nullopt, {}, {}, {}};
    if (!result.ideal.fails()) {
      result.associative = detail::associative_check(set, radius);
    }
    result.predicates = set_predicates(set, radius);
    if (op == SetOp::difference) {
      result.a_in_b = included_on_ball(sa, sb, radius);
      result.b_in_a = included_on_ball(sb, sa, radius);
    }
    return result;
  }

  template <typename TElement>
  struct MinimalGenerators {
    std::vector<TElement> generators;
    //! False when the engine does not support reduction (presented engines);
    //! the generators are then returned as given.
    bool        reduced = true;
    std::string note;
  };

  //! A generating set of which no proper subset generates the same ideal.
  template <MonoidEngine E>
  MinimalGenerators<element_of<E>> minimal_generators(IdealSet<E> const& ideal) {
    MinimalGenerators<element_of<E>> result;
    auto const&                      engine = ideal.engine();
    if constexpr (is_finite_engine_v<E>) {
      // Keep one element from each maximal principal ideal.
      auto const&                    members = ideal.elements();
      std::vector<std::vector<bool>> principal;
      auto const                     ptr = ideal.engine_ptr();
      for (auto q : members) {
        auto const       pq = IdealSet<E>::closure(ptr, {q}, 0);
        std::vector<bool> mask(engine.size(), false);
        for (auto x : pq.elements()) {
          mask[x] = true;
        }
        principal.push_back(std::move(mask));
      }
      auto subset = [](std::vector<bool> const& x, std::vector<bool> const& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (x[i] && !y[i]) {
            return false;
          }
        }
        return true;
      };
      for (std::size_t i = 0; i < members.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < members.size() && keep; ++j) {
          if (i == j || !subset(principal[i], principal[j])) {
            continue;
          }
          // Strictly smaller, or the same principal ideal with a smaller index.
          keep = !(!subset(principal[j], principal[i]) || j < i);
        }
        if (keep) {
          result.generators.push_back(members[i]);
        }
      }
    } else if constexpr (is_free_engine_v<E>) {
      auto const& gens = ideal.generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
          redundant = i != j && is_factor(gens[j], gens[i]);
        }
        if (!redundant) {
          result.generators.push_back(gens[i]);
        }
      }
    } else {
      result.generators = ideal.generators();
      result.reduced    = false;
      result.note       = std::string(to_string(ErrorCode::unsupported_engine))
                    + ": generators of presented ideals are returned unreduced";
    }
    return result;
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_PREDICATES_HPP_
