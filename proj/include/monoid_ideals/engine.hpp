// The common interface of the three monoid backends.

#ifndef MONOID_IDEALS_ENGINE_HPP_
#define MONOID_IDEALS_ENGINE_HPP_

#include <algorithm>    // for sort, unique
#include <concepts>     // for same_as, convertible_to
#include <cstddef>      // for size_t
#include <memory>       // for shared_ptr
#include <string>       // for string
#include <type_traits>  // for is_same_v
#include <variant>      // for variant
#include <vector>       // for vector

#include "ball.hpp"
#include "finite_monoid.hpp"
#include "free_monoid.hpp"
#include "presented_monoid.hpp"

namespace monoid_ideals {

  template <typename E>
  concept MonoidEngine = requires(E const&                       e,
                                  typename E::element_type const& x,
                                  std::size_t                     n) {
    typename E::element_less;
    { e.identity() } -> std::same_as<typename E::element_type>;
    { e.multiply(x, x) } -> std::same_as<typename E::element_type>;
    { e.ball(n) } -> std::same_as<ElementBall<typename E::element_type>>;
    { e.format(x) } -> std::convertible_to<std::string>;
    { e.generator_count() } -> std::convertible_to<std::size_t>;
    { e.generator(n) } -> std::same_as<typename E::element_type>;
    { e.is_element(x) } -> std::convertible_to<bool>;
    { e.exact_equality() } -> std::convertible_to<bool>;
  };

  static_assert(MonoidEngine<FiniteMonoid>);
  static_assert(MonoidEngine<FreeMonoid>);
  static_assert(MonoidEngine<PresentedMonoid>);

  template <typename E>
  using element_of = typename E::element_type;

  template <typename E>
  constexpr bool is_finite_engine_v = std::is_same_v<E, FiniteMonoid>;

  template <typename E>
  constexpr bool is_free_engine_v = std::is_same_v<E, FreeMonoid>;

  template <typename E>
  constexpr bool is_presented_engine_v = std::is_same_v<E, PresentedMonoid>;

  template <typename E>
  constexpr bool is_word_engine_v = !is_finite_engine_v<E>;

  //! Engines are shared immutably between ideals, morphisms and reports.
  using AnyEngine = std::variant<std::shared_ptr<FiniteMonoid const>,
                                 std::shared_ptr<FreeMonoid const>,
                                 std::shared_ptr<PresentedMonoid const>>;

  template <MonoidEngine E>
  void sort_unique(std::vector<element_of<E>>& xs) {
    typename E::element_less less;
    std::sort(xs.begin(), xs.end(), less);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }

  template <MonoidEngine E>
  void require_element(E const& engine, element_of<E> const& x) {
    if (!engine.is_element(x)) {
      throw Error(ErrorCode::unknown_element, "not a canonical element of the engine");
    }
  }

  template <MonoidEngine E>
  std::string format_elements(E const& engine, std::vector<element_of<E>> const& xs) {
    std::string result = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      result += (i == 0 ? "" : ", ") + engine.format(xs[i]);
    }
    return result + "}";
  }

  inline std::string engine_kind(AnyEngine const& e) {
    switch (e.index()) {
      case 0: return "finite";
      case 1: return "free";
      default: return "presented";
    }
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_ENGINE_HPP_
