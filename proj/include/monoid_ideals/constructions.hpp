// The root monoid √M and the quadratic monoid M², the ideals √P and P²,
// the corollary linking them, and the setwise (Boolean) product.
//
// √M has generators s′, s″ for each generator s of M and the relations of M
// with every s replaced by s′s″; M embeds into it by s ↦ s′s″. M² has a
// generator g_jk for each ordered pair of generators of M and maps onto the
// submonoid of M they generate by g_jk ↦ s_j s_k. Its relations are found by
// comparing the images of all M² words up to the working radius.

#ifndef MONOID_IDEALS_CONSTRUCTIONS_HPP_
#define MONOID_IDEALS_CONSTRUCTIONS_HPP_

#include <algorithm>      // for all_of, any_of
#include <cstddef>        // for size_t
#include <memory>         // for shared_ptr, make_shared
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "element_set.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "ideal_set.hpp"
#include "morphism.hpp"
#include "predicates.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  enum class DerivedKind { sqrt, square };

  inline std::string_view to_string(DerivedKind k) noexcept {
    return k == DerivedKind::sqrt ? "SQRT" : "SQUARE";
  }

  template <MonoidEngine Base>
  struct DerivedPresentation {
    static_assert(is_word_engine_v<Base>);

    DerivedKind                            kind = DerivedKind::sqrt;
    std::shared_ptr<Base const>            base;
    std::shared_ptr<PresentedMonoid const> derived;
    //! √M: M → √M.
    std::optional<Morphism<Base, PresentedMonoid>> base_to_derived;
    //! M²: M² → M.
    std::optional<Morphism<PresentedMonoid, Base>> derived_to_base;
    std::size_t radius = 0;
    //! Longest M² word whose image was compared during relation discovery.
    std::size_t discovery_length = 0;
    //! The embedding preserves the relations of its source.
    bool        homomorphic = true;
    std::string violation;
    //! f(xy) = f(x)f(y) for x, y in the source ball.
    Verdict<word_type> multiplicative;
    //! Distinct ball elements have distinct images.
    Verdict<word_type> injective;
    std::vector<std::string> notes;
  };

  namespace detail {
    template <MonoidEngine Base>
    void require_derivable(Base const& base, std::size_t radius) {
      if constexpr (is_presented_engine_v<Base>) {
        if (!base.confluent()) {
          throw Error(ErrorCode::partial_completion,
                      "derived monoids need a confluent rewriting system for the base");
        }
      }
      if (radius < 2) {
        throw Error(ErrorCode::radius_too_small, "derived monoids need radius at least 2");
      }
    }

    template <MonoidEngine Base>
    std::vector<relation_type> base_relations(Base const& base) {
      if constexpr (is_presented_engine_v<Base>) {
        return base.relations();
      } else {
        return {};
      }
    }

    template <MonoidEngine Base>
    CompletionBudget base_budget(Base const& base) {
      if constexpr (is_presented_engine_v<Base>) {
        return base.budget();
      } else {
        return {};
      }
    }

    inline bool single_character_names(Alphabet const& a) {
      for (auto const& n : a.names()) {
        if (n.size() != 1) {
          return false;
        }
      }
      return true;
    }

    template <MonoidEngine Src, MonoidEngine Tgt>
    void validate_embedding(Morphism<Src, Tgt> const&      f,
                            ElementBall<word_type> const&  ball,
                            std::size_t                    radius,
                            bool&                          homomorphic,
                            std::string&                   violation,
                            Verdict<word_type>&            multiplicative,
                            Verdict<word_type>&            injective) {
      auto const v = f.validate(radius);
      homomorphic  = v.homomorphic;
      violation    = v.violation;
      auto const& tgt = f.target();
      UniversalCheck<word_type> mult(ball.exhaustive, ball.radius);
      std::vector<word_type>    images;
      for (auto const& x : ball.elements) {
        images.push_back(f.apply(x));
      }
      for (std::size_t i = 0; i < ball.size() && !mult.failed(); ++i) {
        for (std::size_t j = 0; j < ball.size(); ++j) {
          auto lhs = f.apply(f.source().multiply(ball.elements[i], ball.elements[j]));
          if (mult.record(to_membership(lhs == tgt.multiply(images[i], images[j])),
                          {ball.elements[i], ball.elements[j]})) {
            break;
          }
        }
      }
      multiplicative = mult.finish();
      UniversalCheck<word_type>                                    inj(ball.exhaustive, ball.radius);
      std::unordered_map<word_type, std::size_t, WordHash> seen;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        auto [it, inserted] = seen.emplace(images[i], i);
        auto const exact    = tgt.exact_equality();
        auto const m        = inserted ? Membership::in : Membership::out;
        if (inj.record(exact || m == Membership::in ? m : Membership::unknown,
                       {ball.elements[it->second], ball.elements[i]})) {
          break;
        }
      }
      injective = inj.finish();
    }
  }  // namespace detail

  template <MonoidEngine Base>
  DerivedPresentation<Base> derived_monoid(std::shared_ptr<Base const> base,
                                           DerivedKind                 kind,
                                           std::size_t                 radius,
                                           std::size_t word_cap = 50000) {
    detail::require_derivable(*base, radius);
    DerivedPresentation<Base> dp;
    dp.kind   = kind;
    dp.base   = base;
    dp.radius = radius;
    auto const& names = base->alphabet().names();
    auto const  k     = names.size();
    if (kind == DerivedKind::sqrt) {
      std::vector<std::string> derived_names;
      for (auto const& n : names) {
        derived_names.push_back(n + "'");
        derived_names.push_back(n + "''");
      }
      auto substitute = [](word_type const& w) {
        word_type result;
        for (auto l : w) {
          result.push_back(2 * l);
          result.push_back(2 * l + 1);
        }
        return result;
      };
      std::vector<relation_type> relations;
      for (auto const& [u, v] : detail::base_relations(*base)) {
        relations.emplace_back(substitute(u), substitute(v));
      }
      dp.derived = std::make_shared<PresentedMonoid const>(PresentedMonoid::complete(
          Alphabet(std::move(derived_names)), std::move(relations), detail::base_budget(*base)));
      std::vector<word_type> images;
      for (letter_type s = 0; s < k; ++s) {
        images.push_back(dp.derived->canonical(word_type{2 * s, 2 * s + 1}));
      }
      dp.base_to_derived.emplace(base, dp.derived, std::move(images));
      detail::validate_embedding(*dp.base_to_derived, base->ball(radius), radius,
                                 dp.homomorphic, dp.violation, dp.multiplicative,
                                 dp.injective);
    } else {
      bool const               single = detail::single_character_names(base->alphabet());
      std::vector<std::string> derived_names;
      std::vector<word_type>   images;
      for (letter_type j = 0; j < k; ++j) {
        for (letter_type l = 0; l < k; ++l) {
          derived_names.push_back("g_" + names[j] + (single ? "" : "_") + names[l]);
          images.push_back(base->multiply(base->generator(j), base->generator(l)));
        }
      }
      auto const letters = k * k;
      // Longest length whose words fit within the cap.
      std::size_t length = 0, total = 1, level = 1;
      while (length < radius && letters > 0) {
        level *= letters;
        if (total + level > word_cap) {
          break;
        }
        total += level;
        ++length;
      }
      dp.discovery_length = length;
      if (length < radius) {
        dp.notes.push_back("relation discovery limited to M² words of length "
                           + std::to_string(length));
      }
      Alphabet                   alphabet(std::move(derived_names));
      std::vector<relation_type> relations;
      auto current = PresentedMonoid::complete(alphabet, {}, detail::base_budget(*base));
      std::unordered_map<word_type, word_type, WordHash> first_with_image;
      auto image_of = [&](word_type const& w) {
        auto y = base->identity();
        for (auto l : w) {
          y = base->multiply(y, images[l]);
        }
        return y;
      };
      // Words in shortlex order; a reducible word equals an earlier one.
      std::vector<word_type> level_words{word_type{}};
      for (std::size_t len = 0; len <= length; ++len) {
        std::vector<word_type> next;
        for (auto const& w : level_words) {
          if (!current.rewriting_system().is_irreducible(w)) {
            continue;
          }
          auto [it, inserted] = first_with_image.emplace(image_of(w), w);
          if (!inserted && current.canonical(w) != current.canonical(it->second)) {
            relations.emplace_back(w, it->second);
            current = PresentedMonoid::complete(alphabet, relations, detail::base_budget(*base));
          }
          if (len < length) {
            for (letter_type l = 0; l < letters; ++l) {
              auto x = w;
              x.push_back(l);
              next.push_back(std::move(x));
            }
          }
        }
        level_words = std::move(next);
      }
      dp.derived = std::make_shared<PresentedMonoid const>(std::move(current));
      if (!dp.derived->confluent()) {
        dp.notes.push_back("completion of the discovered relations is partial ("
                           + dp.derived->limit() + ")");
      }
      dp.derived_to_base.emplace(dp.derived, base, std::move(images));
      detail::validate_embedding(*dp.derived_to_base, dp.derived->ball(length), length,
                                 dp.homomorphic, dp.violation, dp.multiplicative,
                                 dp.injective);
    }
    return dp;
  }

  template <typename TElement>
  struct DerivedIdeal {
    IdealSet<PresentedMonoid> ideal;
    //! Generators of the derived ideal, before closure.
    std::vector<word_type> seed;
    //! M² only: products of generators of P with no M² preimage found.
    std::vector<TElement> unrepresentable;
  };

  //! √P is the ideal of √M generated by the images of the minimal
  //! generators of P. P² is the ideal of M² generated by the products g·h
  //! of minimal generators of P, written over the M² generators.
  template <MonoidEngine Base>
  DerivedIdeal<element_of<Base>> derived_ideal(DerivedPresentation<Base> const& dp,
                                               IdealSet<Base> const&            p,
                                               std::size_t                      radius) {
    if (p.engine_ptr() != dp.base) {
      throw Error(ErrorCode::engine_mismatch, "the ideal does not belong to the base monoid");
    }
    auto const              gens = minimal_generators(p).generators;
    std::vector<word_type>  seed;
    std::vector<word_type>  unrepresentable;
    if (dp.kind == DerivedKind::sqrt) {
      for (auto const& g : gens) {
        seed.push_back(dp.base_to_derived->apply(g));
      }
    } else {
      std::unordered_map<word_type, word_type, WordHash> preimage;
      if constexpr (is_presented_engine_v<Base>) {
        for (auto const& w : dp.derived->ball(dp.discovery_length).elements) {
          preimage.emplace(dp.derived_to_base->apply(w), w);
        }
      }
      auto const k = dp.base->generator_count();
      for (auto const& g : gens) {
        for (auto const& h : gens) {
          auto product = dp.base->multiply(g, h);
          if constexpr (is_free_engine_v<Base>) {
            if (product.size() % 2 == 0) {
              word_type w;
              for (std::size_t i = 0; i < product.size(); i += 2) {
                w.push_back(static_cast<letter_type>(product[i] * k + product[i + 1]));
              }
              seed.push_back(dp.derived->canonical(w));
              continue;
            }
          } else {
            auto it = preimage.find(product);
            if (it != preimage.end()) {
              seed.push_back(it->second);
              continue;
            }
          }
          unrepresentable.push_back(std::move(product));
        }
      }
      sort_unique<Base>(unrepresentable);
      if (seed.empty() && !unrepresentable.empty()) {
        throw Error(ErrorCode::unrepresentable_generator,
                    "no product of generators of P is a product of M² generators: "
                        + format_elements(*dp.base, unrepresentable));
      }
    }
    sort_unique<PresentedMonoid>(seed);
    return DerivedIdeal<element_of<Base>>{
        IdealSet<PresentedMonoid>::closure(dp.derived, seed, radius), seed,
        std::move(unrepresentable)};
  }

  //! {ab : a ∈ A, b ∈ B}.
  template <MonoidEngine E>
  std::vector<element_of<E>> boolean_product(E const&                          engine,
                                             std::vector<element_of<E>> const& a,
                                             std::vector<element_of<E>> const& b) {
    std::vector<element_of<E>> result;
    for (auto const& x : a) {
      for (auto const& y : b) {
        result.push_back(engine.multiply(x, y));
      }
    }
    sort_unique<E>(result);
    return result;
  }

  template <MonoidEngine E>
  struct IdealProduct {
    //! Exact on finite engines; products of ball members otherwise.
    std::vector<element_of<E>> elements;
    Verdict<element_of<E>>     ideal;
  };

  //! The product of two ideals and a check that it is again an ideal. On
  //! finite engines the check is exact. On word engines each p = ab with
  //! a ∈ A, b ∈ B in the ball is checked element-wise: pm = a(bm) and
  //! mp = (ma)b lie in A·B whenever bm ∈ B and ma ∈ A.
  template <MonoidEngine E>
  IdealProduct<E> boolean_product(IdealSet<E> const& a, IdealSet<E> const& b, std::size_t radius) {
    if (a.engine_ptr() != b.engine_ptr()) {
      throw Error(ErrorCode::engine_mismatch, "ideals belong to different engines");
    }
    auto const& engine = a.engine();
    IdealProduct<E> result;
    if constexpr (is_finite_engine_v<E>) {
      result.elements = boolean_product(engine, a.elements(), b.elements());
      result.ideal    = is_ideal(ElementSet<E>::of_elements(a.engine_ptr(), result.elements), 0);
    } else {
      auto const ball = engine.ball(radius);
      result.elements = boolean_product(engine, a.cached_ball(), b.cached_ball());
      UniversalCheck<element_of<E>> check(false, ball.radius);
      for (auto const& x : a.cached_ball()) {
        for (auto const& y : b.cached_ball()) {
          for (auto const& m : ball.elements) {
            auto const ok = kleene_and(b.contains(engine.multiply(y, m)),
                                       a.contains(engine.multiply(m, x)));
            if (check.record(ok, {x, y, m})) {
              result.ideal = check.finish("a·b·m or m·a·b leaves the product");
              return result;
            }
          }
        }
      }
      result.ideal = check.finish();
    }
    return result;
  }

  enum class Consistency { consistent, violated, undetermined };

  inline std::string_view to_string(Consistency c) noexcept {
    switch (c) {
      case Consistency::consistent: return "CONSISTENT";
      case Consistency::violated: return "VIOLATED";
      case Consistency::undetermined: return "UNDETERMINED";
    }
    return "?";
  }

  //! Whether two verdicts agree as truth values.
  template <typename T, typename U>
  Consistency biconditional(Verdict<T> const& x, Verdict<U> const& y) {
    if (x.kind == VerdictKind::inconclusive || y.kind == VerdictKind::inconclusive) {
      return Consistency::undetermined;
    }
    return x.holds() == y.holds() ? Consistency::consistent : Consistency::violated;
  }

  template <MonoidEngine Base>
  struct CorollaryReport {
    DerivedPresentation<Base>      root;
    DerivedPresentation<Base>      square;
    DerivedIdeal<element_of<Base>> root_ideal;
    DerivedIdeal<element_of<Base>> square_ideal;
    Verdict<word_type>             prime_p;
    Verdict<word_type>             associative_root_p;
    Verdict<word_type>             associative_p;
    Verdict<word_type>             prime_square_p;
    //! √P associative ⇔ P prime.
    Consistency first  = Consistency::undetermined;
    //! P associative ⇔ P² prime.
    Consistency second = Consistency::undetermined;
  };

  template <MonoidEngine Base>
  CorollaryReport<Base> corollary_check(std::shared_ptr<Base const> base,
                                        IdealSet<Base> const&       p,
                                        std::size_t                 radius) {
    auto root         = derived_monoid(base, DerivedKind::sqrt, radius);
    auto square       = derived_monoid(base, DerivedKind::square, radius);
    auto root_ideal   = derived_ideal(root, p, radius);
    auto square_ideal = derived_ideal(square, p, radius);
    auto prime_p      = is_prime(p, radius);
    auto assoc_root   = is_associative(root_ideal.ideal, radius);
    auto assoc_p      = is_associative(p, radius);
    auto prime_square = is_prime(square_ideal.ideal, radius);
    auto first        = biconditional(assoc_root, prime_p);
    auto second       = biconditional(assoc_p, prime_square);
    return CorollaryReport<Base>{std::move(root),   std::move(square),     std::move(root_ideal),
                                 std::move(square_ideal), std::move(prime_p), std::move(assoc_root),
                                 std::move(assoc_p), std::move(prime_square), first, second};
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_CONSTRUCTIONS_HPP_
