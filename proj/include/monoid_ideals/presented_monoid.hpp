// Finitely presented monoids, with equality decided by a completed
// rewriting system where one is available.

#ifndef MONOID_IDEALS_PRESENTED_MONOID_HPP_
#define MONOID_IDEALS_PRESENTED_MONOID_HPP_

#include <cstddef>        // for size_t
#include <string>         // for string
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "ball.hpp"
#include "errors.hpp"
#include "rewriting.hpp"
#include "word.hpp"

namespace monoid_ideals {

  struct NormalForm {
    word_type word;
    //! False when the rewriting system is only partially completed, in which
    //! case distinct irreducible words may still be equal in the monoid.
    bool canonical = true;
  };

  class PresentedMonoid {
   public:
    using element_type = word_type;
    using element_less = ShortlexLess;

    //! Largest equivalence class explored when canonicalising in a
    //! homogeneous presentation whose completion is partial.
    static constexpr std::size_t class_budget = 200'000;

    //! Runs Knuth-Bendix completion on the relations and wraps the result.
    static PresentedMonoid complete(Alphabet                   alphabet,
                                    std::vector<relation_type> relations,
                                    CompletionBudget           budget = {}) {
      for (auto const& [u, v] : relations) {
        if (!alphabet.contains(u) || !alphabet.contains(v)) {
          throw Error(ErrorCode::validation_error,
                      "relation uses a letter outside the alphabet");
        }
      }
      auto completion = knuth_bendix(alphabet.size(), relations, budget);
      return PresentedMonoid(std::move(alphabet),
                             std::move(relations),
                             std::move(completion),
                             budget);
    }

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<relation_type> const& relations() const noexcept {
      return _relations;
    }

    std::vector<Rule> const& rules() const noexcept {
      return _system.rules();
    }

    RewritingSystem const& rewriting_system() const noexcept {
      return _system;
    }

    CompletionStatus status() const noexcept {
      return _status;
    }

    std::string const& limit() const noexcept {
      return _limit;
    }

    CompletionBudget const& budget() const noexcept {
      return _budget;
    }

    //! Every relation has sides of equal length, so word length is an
    //! invariant of the monoid.
    bool homogeneous() const noexcept {
      return _homogeneous;
    }

    bool confluent() const noexcept {
      return _status == CompletionStatus::confluent;
    }

    //! Equality of canonical forms coincides with equality in the monoid.
    bool exact_equality() const noexcept {
      return confluent() || _homogeneous;
    }

    NormalForm normalize(word_type const& w) const {
      return {_system.rewrite(w), confluent()};
    }

    //! The representative used for elements: the rewrite normal form when
    //! confluent; the shortlex-least word of the (finite) class in a
    //! homogeneous presentation; an irreducible word otherwise.
    element_type canonical(word_type const& w) const {
      auto u = _system.rewrite(w);
      if (confluent() || !_homogeneous) {
        return u;
      }
      auto cls = equivalence_class(u);
      return *std::min_element(cls.begin(), cls.end(), ShortlexLess());
    }

    //! All words equal to \p w by the defining relations. Only finite for
    //! homogeneous presentations; throws LIMIT_EXCEEDED otherwise or when
    //! the class outgrows class_budget.
    std::vector<word_type> equivalence_class(word_type const& w) const {
      if (!_homogeneous) {
        throw Error(ErrorCode::limit_exceeded,
                    "equivalence classes are only enumerable for homogeneous "
                    "presentations");
      }
      std::unordered_set<word_type, WordHash> seen{w};
      std::vector<word_type>                  result{w};
      for (std::size_t i = 0; i < result.size(); ++i) {
        for (auto const& [u, v] : _relations) {
          for (int side = 0; side < 2; ++side) {
            auto const& from = side == 0 ? u : v;
            auto const& to   = side == 0 ? v : u;
            if (from.empty() || from.size() > result[i].size()) {
              continue;
            }
            for (std::size_t p = 0; p + from.size() <= result[i].size(); ++p) {
              if (!std::equal(from.begin(), from.end(), result[i].begin() + p)) {
                continue;
              }
              word_type next(result[i].begin(), result[i].begin() + p);
              next.insert(next.end(), to.begin(), to.end());
              next.insert(next.end(), result[i].begin() + p + from.size(), result[i].end());
              if (seen.insert(next).second) {
                result.push_back(std::move(next));
                if (result.size() > class_budget) {
                  throw Error(ErrorCode::limit_exceeded,
                              "equivalence class exceeds budget");
                }
              }
            }
          }
        }
      }
      return result;
    }

    bool is_canonical(word_type const& w) const {
      if (!_system.is_irreducible(w)) {
        return false;
      }
      if (confluent() || !_homogeneous) {
        return true;
      }
      return canonical(w) == w;
    }

    element_type identity() const {
      return {};
    }

    element_type multiply(element_type const& x, element_type const& y) const {
      return canonical(concat(x, y));
    }

    bool is_element(element_type const& x) const {
      return _alphabet.contains(x) && is_canonical(x);
    }

    std::size_t generator_count() const noexcept {
      return _alphabet.size();
    }

    element_type generator(std::size_t i) const {
      return canonical({static_cast<letter_type>(i)});
    }

    std::string const& generator_name(std::size_t i) const {
      return _alphabet.name(static_cast<letter_type>(i));
    }

    std::string format(element_type const& x) const {
      return _alphabet.format(x);
    }

    //! Canonical words of length at most \p radius, by extending canonical
    //! words one letter at a time (canonical words are prefix-closed). When
    //! a whole length level is empty the ball has saturated and is exhaustive.
    ElementBall<element_type> ball(std::size_t radius) const {
      ElementBall<element_type> result;
      result.radius = radius;
      result.elements.push_back({});
      std::size_t level_begin = 0;
      bool        saturated   = _alphabet.size() == 0;
      for (std::size_t len = 1; len <= radius && !saturated; ++len) {
        std::size_t const level_end = result.elements.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
          for (letter_type x = 0; x < _alphabet.size(); ++x) {
            auto w = result.elements[i];
            w.push_back(x);
            if (is_canonical(w)) {
              result.elements.push_back(std::move(w));
            }
          }
        }
        saturated   = result.elements.size() == level_end;
        level_begin = level_end;
      }
      if (!saturated && _alphabet.size() > 0) {
        // A full level at the radius may still be the last one.
        std::size_t const level_end = result.elements.size();
        saturated                   = true;
        for (std::size_t i = level_begin; i < level_end && saturated; ++i) {
          for (letter_type x = 0; x < _alphabet.size(); ++x) {
            auto w = result.elements[i];
            w.push_back(x);
            if (is_canonical(w)) {
              saturated = false;
              break;
            }
          }
        }
      }
      result.exhaustive = saturated;
      return result;
    }

   private:
    PresentedMonoid(Alphabet                   alphabet,
                    std::vector<relation_type> relations,
                    Completion                 completion,
                    CompletionBudget           budget)
        : _alphabet(std::move(alphabet)),
          _relations(std::move(relations)),
          _system(_alphabet.size(), std::move(completion.rules), budget.step_budget),
          _status(completion.status),
          _limit(std::move(completion.limit)),
          _budget(budget),
          _homogeneous(true) {
      for (auto const& [u, v] : _relations) {
        if (u.size() != v.size()) {
          _homogeneous = false;
        }
      }
    }

    Alphabet                   _alphabet;
    std::vector<relation_type> _relations;
    RewritingSystem            _system;
    CompletionStatus           _status;
    std::string                _limit;
    CompletionBudget           _budget;
    bool                       _homogeneous;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_PRESENTED_MONOID_HPP_
