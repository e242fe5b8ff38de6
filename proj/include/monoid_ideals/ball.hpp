// Bounded quantifier domains.

#ifndef MONOID_IDEALS_BALL_HPP_
#define MONOID_IDEALS_BALL_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

namespace monoid_ideals {

  //! All distinct canonical elements of word length at most a radius, in
  //! shortlex order (index order for finite engines). A ball is exhaustive
  //! when it provably contains every element of the monoid.
  template <typename TElement>
  struct ElementBall {
    //! Empty for finite engines, whose balls are the whole monoid.
    std::optional<std::size_t> radius;
    std::vector<TElement>      elements;
    bool                       exhaustive = false;

    std::size_t size() const noexcept {
      return elements.size();
    }
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_BALL_HPP_
