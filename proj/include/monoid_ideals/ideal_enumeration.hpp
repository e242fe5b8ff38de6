// Candidate ideal universes: every ideal of a small finite monoid, and the
// ideals of a word engine generated by few short words.

#ifndef MONOID_IDEALS_IDEAL_ENUMERATION_HPP_
#define MONOID_IDEALS_IDEAL_ENUMERATION_HPP_

#include <algorithm>      // for sort
#include <bit>            // for popcount
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <memory>         // for shared_ptr
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "engine.hpp"
#include "errors.hpp"
#include "ideal_set.hpp"
#include "word.hpp"

namespace monoid_ideals {

  using element_mask = std::uint64_t;

  inline std::vector<std::size_t> mask_elements(element_mask m) {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < 64; ++i) {
      if (m >> i & 1U) {
        result.push_back(i);
      }
    }
    return result;
  }

  //! The principal ideal M·x·M of every element, as bit masks.
  inline std::vector<element_mask> principal_ideal_masks(FiniteMonoid const& m) {
    if (m.size() > 64) {
      throw Error(ErrorCode::limit_exceeded, "ideal enumeration supports at most 64 elements");
    }
    std::vector<element_mask> result(m.size(), 0);
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t u = 0; u < m.size(); ++u) {
        auto ux = m.multiply(u, x);
        for (std::size_t v = 0; v < m.size(); ++v) {
          result[x] |= element_mask(1) << m.multiply(ux, v);
        }
      }
    }
    return result;
  }

  //! Every ideal of \p m, including the empty set and m itself, ordered by
  //! size and then by mask. Ideals are exactly the unions of principal
  //! ideals, so the walk starts from the empty set and adds one principal
  //! ideal at a time.
  inline std::vector<element_mask> all_ideal_masks(FiniteMonoid const& m,
                                                   std::size_t cap = std::size_t(1) << 20) {
    auto const                       principal = principal_ideal_masks(m);
    std::unordered_set<element_mask> seen{0};
    std::vector<element_mask>        frontier{0};
    std::vector<element_mask>        result{0};
    while (!frontier.empty()) {
      std::vector<element_mask> next;
      for (auto ideal : frontier) {
        for (auto p : principal) {
          auto joined = ideal | p;
          if (seen.insert(joined).second) {
            if (seen.size() > cap) {
              throw Error(ErrorCode::limit_exceeded, "too many ideals to enumerate");
            }
            next.push_back(joined);
            result.push_back(joined);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(result.begin(), result.end(), [](element_mask a, element_mask b) {
      auto pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    return result;
  }

  inline std::vector<IdealSet<FiniteMonoid>>
  all_ideals(std::shared_ptr<FiniteMonoid const> const& m) {
    std::vector<IdealSet<FiniteMonoid>> result;
    for (auto mask : all_ideal_masks(*m)) {
      result.push_back(IdealSet<FiniteMonoid>::from_elements(m, mask_elements(mask)));
    }
    return result;
  }

  //! Non-empty subsets of {0, ..., n-1} as sorted index lists, ordered by
  //! size and then lexicographically.
  inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
    if (n > 16) {
      throw Error(ErrorCode::limit_exceeded, "too many generators to enumerate subsets");
    }
    std::vector<std::vector<std::size_t>> result;
    for (std::uint32_t m = 1; m < (std::uint32_t(1) << n); ++m) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1U) {
          subset.push_back(i);
        }
      }
      result.push_back(std::move(subset));
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return result;
  }

  struct WordUniverseOptions {
    //! Longest generator word.
    std::size_t generator_radius = 3;
    //! Largest generating set.
    std::size_t max_generators = 2;
    //! Stop after this many candidates.
    std::size_t cap = 100000;
  };

  template <typename TElement>
  struct GeneratorSets {
    std::vector<std::vector<TElement>> sets;
    bool                               capped = false;
  };

  //! Generating sets of at most max_generators non-identity elements of
  //! length at most generator_radius, in which no element lies in the ideal
  //! generated by another. On free engines these are exactly the minimal
  //! generating sets, so distinct sets give distinct ideals.
  template <MonoidEngine E>
  GeneratorSets<element_of<E>> antichain_generator_sets(std::shared_ptr<E const> const& engine,
                                                        WordUniverseOptions const& options,
                                                        std::size_t                radius) {
    static_assert(is_word_engine_v<E>);
    GeneratorSets<element_of<E>> result;
    std::vector<element_of<E>>   words;
    for (auto const& w : engine->ball(options.generator_radius).elements) {
      if (!(w == engine->identity())) {
        words.push_back(w);
      }
    }
    auto below = [&](element_of<E> const& x, element_of<E> const& y) {
      // x ∈ I(y)
      if constexpr (is_free_engine_v<E>) {
        return is_factor(y, x);
      } else {
        return IdealSet<E>::closure(engine, {y}, radius).contains(x) == Membership::in;
      }
    };
    std::vector<std::size_t> chosen;
    auto recurse = [&](auto&& self, std::size_t from) -> void {
      if (!chosen.empty()) {
        if (result.sets.size() >= options.cap) {
          result.capped = true;
          return;
        }
        std::vector<element_of<E>> set;
        for (auto i : chosen) {
          set.push_back(words[i]);
        }
        result.sets.push_back(std::move(set));
      }
      if (chosen.size() == options.max_generators) {
        return;
      }
      for (std::size_t i = from; i < words.size() && !result.capped; ++i) {
        bool independent = true;
        for (auto j : chosen) {
          if (below(words[i], words[j]) || below(words[j], words[i])) {
            independent = false;
            break;
          }
        }
        if (independent) {
          chosen.push_back(i);
          self(self, i + 1);
          chosen.pop_back();
        }
      }
    };
    recurse(recurse, 0);
    std::stable_sort(result.sets.begin(), result.sets.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    return result;
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_IDEAL_ENUMERATION_HPP_
