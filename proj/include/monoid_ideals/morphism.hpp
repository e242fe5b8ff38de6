// Monoid morphisms determined by the images of the source generators.

#ifndef MONOID_IDEALS_MORPHISM_HPP_
#define MONOID_IDEALS_MORPHISM_HPP_

#include <cstddef>        // for size_t
#include <memory>         // for shared_ptr
#include <queue>          // for queue
#include <string>         // for string
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "engine.hpp"
#include "errors.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  template <typename TTargetElement>
  struct MorphismValidation {
    bool homomorphic = true;
    //! Human description of the first relation or product not preserved.
    std::string                      violation;
    Verdict<TTargetElement>          surjective;
  };

  template <MonoidEngine Source, MonoidEngine Target>
  class Morphism {
   public:
    using source_element = element_of<Source>;
    using target_element = element_of<Target>;

    //! \p images[i] is the image of the i-th source generator.
    Morphism(std::shared_ptr<Source const>  source,
             std::shared_ptr<Target const>  target,
             std::vector<target_element>    images)
        : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {
      if (_images.size() != _source->generator_count()) {
        throw Error(ErrorCode::partial_map,
                    "expected an image for each of the "
                        + std::to_string(_source->generator_count())
                        + " source generators");
      }
      for (auto const& y : _images) {
        require_element(*_target, y);
      }
      if constexpr (is_finite_engine_v<Source>) {
        if (!_source->generators_generate()) {
          throw Error(ErrorCode::partial_map,
                      "the source generators do not generate the source monoid");
        }
      }
    }

    Source const& source() const noexcept {
      return *_source;
    }

    Target const& target() const noexcept {
      return *_target;
    }

    std::shared_ptr<Source const> const& source_ptr() const noexcept {
      return _source;
    }

    std::shared_ptr<Target const> const& target_ptr() const noexcept {
      return _target;
    }

    std::vector<target_element> const& images() const noexcept {
      return _images;
    }

    //! Image of a word over the source generators.
    target_element apply_word(word_type const& w) const {
      auto y = _target->identity();
      for (auto l : w) {
        y = _target->multiply(y, _images.at(l));
      }
      return y;
    }

    target_element apply(source_element const& x) const {
      if constexpr (is_finite_engine_v<Source>) {
        return apply_word(*_source->element_words().at(x));
      } else {
        return apply_word(x);
      }
    }

    std::vector<target_element> image_of_set(std::vector<source_element> const& xs) const {
      std::vector<target_element> result;
      result.reserve(xs.size());
      for (auto const& x : xs) {
        result.push_back(apply(x));
      }
      sort_unique<Target>(result);
      return result;
    }

    //! Checks that the generator assignment extends to a homomorphism and
    //! whether it is onto. Surjectivity is exact for finite and free targets;
    //! for presented targets it searches the source ball of \p radius for a
    //! preimage of every target generator.
    MorphismValidation<target_element> validate(std::size_t radius = 4) const {
      MorphismValidation<target_element> result;
      if constexpr (is_presented_engine_v<Source>) {
        for (auto const& [u, v] : _source->relations()) {
          if (apply_word(u) != apply_word(v)) {
            result.homomorphic = false;
            result.violation   = _source->format(u) + " = " + _source->format(v);
            break;
          }
        }
      } else if constexpr (is_finite_engine_v<Source>) {
        auto const n = _source->size();
        for (std::size_t x = 0; x < n && result.homomorphic; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (apply(_source->multiply(x, y))
                != _target->multiply(apply(x), apply(y))) {
              result.homomorphic = false;
              result.violation   = "f(" + _source->format(x) + "·" + _source->format(y)
                                 + ") != f(" + _source->format(x) + ")·f("
                                 + _source->format(y) + ")";
              break;
            }
          }
        }
      }
      result.surjective = check_surjective(radius);
      return result;
    }

   private:
    Verdict<target_element> check_surjective(std::size_t radius) const {
      using V = Verdict<target_element>;
      if constexpr (is_finite_engine_v<Target>) {
        std::vector<bool>       reached(_target->size(), false);
        std::queue<std::size_t> queue;
        reached[_target->identity()] = true;
        queue.push(_target->identity());
        while (!queue.empty()) {
          auto x = queue.front();
          queue.pop();
          for (auto y : _images) {
            auto z = _target->multiply(x, y);
            if (!reached[z]) {
              reached[z] = true;
              queue.push(z);
            }
          }
        }
        for (std::size_t x = 0; x < reached.size(); ++x) {
          if (!reached[x]) {
            return V::failing({x}, std::nullopt, "element not in the image");
          }
        }
        return V::holding(true, std::nullopt);
      } else if constexpr (is_free_engine_v<Target>) {
        // In a free monoid a letter is a product of images only if it is
        // itself an image.
        for (std::size_t i = 0; i < _target->generator_count(); ++i) {
          auto t = _target->generator(i);
          if (std::find(_images.begin(), _images.end(), t) == _images.end()) {
            return V::failing({t}, std::nullopt, "generator not in the image");
          }
        }
        return V::holding(true, std::nullopt);
      } else {
        std::unordered_set<word_type, WordHash> image;
        for (auto const& x : _source->ball(radius).elements) {
          image.insert(apply(x));
        }
        for (std::size_t i = 0; i < _target->generator_count(); ++i) {
          if (!image.count(_target->generator(i))) {
            return V::inconclusive(radius,
                                   "generator " + _target->generator_name(i)
                                       + " has no preimage in the source ball");
          }
        }
        return V::holding(true, std::nullopt);
      }
    }

    std::shared_ptr<Source const> _source;
    std::shared_ptr<Target const> _target;
    std::vector<target_element>   _images;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_MORPHISM_HPP_
