// Free monoids: words under concatenation.

#ifndef MONOID_IDEALS_FREE_MONOID_HPP_
#define MONOID_IDEALS_FREE_MONOID_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "ball.hpp"
#include "word.hpp"

namespace monoid_ideals {

  class FreeMonoid {
   public:
    using element_type = word_type;
    using element_less = ShortlexLess;

    explicit FreeMonoid(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    element_type identity() const {
      return {};
    }

    element_type multiply(element_type const& x, element_type const& y) const {
      return concat(x, y);
    }

    bool is_element(element_type const& x) const noexcept {
      return _alphabet.contains(x);
    }

    std::size_t generator_count() const noexcept {
      return _alphabet.size();
    }

    element_type generator(std::size_t i) const {
      return {static_cast<letter_type>(i)};
    }

    std::string const& generator_name(std::size_t i) const {
      return _alphabet.name(static_cast<letter_type>(i));
    }

    std::string format(element_type const& x) const {
      return _alphabet.format(x);
    }

    //! Every word of length at most \p radius; exhaustive only for the
    //! trivial monoid on the empty alphabet.
    ElementBall<element_type> ball(std::size_t radius) const {
      ElementBall<element_type> result;
      result.radius = radius;
      result.elements.push_back({});
      std::size_t level_begin = 0;
      for (std::size_t len = 1; len <= radius && _alphabet.size() > 0; ++len) {
        std::size_t const level_end = result.elements.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
          for (letter_type x = 0; x < _alphabet.size(); ++x) {
            auto w = result.elements[i];
            w.push_back(x);
            result.elements.push_back(std::move(w));
          }
        }
        level_begin = level_end;
      }
      result.exhaustive = _alphabet.size() == 0;
      return result;
    }

    bool exact_equality() const noexcept {
      return true;
    }

   private:
    Alphabet _alphabet;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_FREE_MONOID_HPP_
