// Two-sided ideals, explicit or given by generators.

#ifndef MONOID_IDEALS_IDEAL_SET_HPP_
#define MONOID_IDEALS_IDEAL_SET_HPP_

#include <algorithm>      // for binary_search, find
#include <cstddef>        // for size_t
#include <memory>         // for shared_ptr, make_shared
#include <queue>          // for queue
#include <string>         // for string
#include <type_traits>    // for conditional_t
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "engine.hpp"
#include "errors.hpp"
#include "factor_search.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  enum class Representation { explicit_set, generated };

  //! An ideal of one engine. Finite engines always hold the exact element
  //! set. Word engines hold generators G (the ideal is M·G·M) together with
  //! whatever is needed to answer membership:
  //!  * free: a factor-search automaton over G (exact);
  //!  * presented, finite and exactly decidable: the exact element set;
  //!  * presented, homogeneous: a factor search over the equivalence class
  //!    of the query (exact, since length is invariant);
  //!  * presented otherwise: the set of u·g·v with u, v in the radius ball,
  //!    answering IN on a hit and UNKNOWN otherwise.
  template <MonoidEngine E>
  class IdealSet {
   public:
    using element_type = element_of<E>;
    using engine_type  = E;

    //! Least ideal containing \p seed.
    static IdealSet closure(std::shared_ptr<E const>  engine,
                            std::vector<element_type> seed,
                            std::size_t               radius) {
      for (auto const& x : seed) {
        require_element(*engine, x);
      }
      sort_unique<E>(seed);
      IdealSet result(std::move(engine), radius);
      result._generators = std::move(seed);
      if constexpr (is_finite_engine_v<E>) {
        result._representation = Representation::explicit_set;
        result.close_explicitly(result._engine->ball().elements);
      } else {
        result._representation = Representation::generated;
        result.prepare_generated();
      }
      return result;
    }

    //! An explicitly listed set, which must already be an ideal.
    static IdealSet from_elements(std::shared_ptr<E const>  engine,
                                  std::vector<element_type> elements,
                                  std::size_t               radius = 0) {
      for (auto const& x : elements) {
        require_element(*engine, x);
      }
      sort_unique<E>(elements);
      if constexpr (is_word_engine_v<E>) {
        if (elements.empty()) {
          return closure(std::move(engine), {}, radius);
        }
      }
      auto const ball = engine->ball(radius);
      if (!ball.exhaustive || !engine->exact_equality()) {
        throw Error(ErrorCode::not_an_ideal,
                    "a finite explicit set cannot be an ideal of a monoid "
                    "that is not known to be finite");
      }
      typename E::element_less less;
      auto member = [&](element_type const& x) {
        return std::binary_search(elements.begin(), elements.end(), x, less);
      };
      for (auto const& q : elements) {
        for (auto const& m : ball.elements) {
          if (!member(engine->multiply(q, m)) || !member(engine->multiply(m, q))) {
            throw Error(ErrorCode::not_an_ideal,
                        "not closed under multiplication: " + engine->format(q)
                            + " with " + engine->format(m));
          }
        }
      }
      IdealSet result(std::move(engine), radius);
      result._representation = Representation::explicit_set;
      result.set_members(std::move(elements));
      return result;
    }

    E const& engine() const noexcept {
      return *_engine;
    }

    std::shared_ptr<E const> const& engine_ptr() const noexcept {
      return _engine;
    }

    Representation representation() const noexcept {
      return _representation;
    }

    std::size_t radius() const noexcept {
      return _radius;
    }

    //! The seed the ideal was built from (canonical, sorted); empty for sets
    //! given explicitly.
    std::vector<element_type> const& generators() const noexcept {
      return _generators;
    }

    //! Members within the radius ball (all members for finite engines).
    std::vector<element_type> const& cached_ball() const noexcept {
      return _cached_ball;
    }

    //! Exact sorted element list, when the ideal is known to be finite.
    std::vector<element_type> const& elements() const noexcept {
      return _members;
    }

    //! Membership never returns UNKNOWN when this is true.
    bool exact() const noexcept {
      return _mode != Mode::bounded;
    }

    Membership contains(element_type const& x) const {
      switch (_mode) {
        case Mode::everything: return Membership::in;
        case Mode::mask:
          if constexpr (is_finite_engine_v<E>) {
            return to_membership(x < _mask.size() && _mask[x]);
          }
          break;
        case Mode::sorted_set:
          return to_membership(std::binary_search(
              _members.begin(), _members.end(), x, typename E::element_less()));
        case Mode::factors:
          if constexpr (is_word_engine_v<E>) {
            return to_membership(_automaton->contains_any(x));
          }
          break;
        case Mode::class_search:
          if constexpr (is_presented_engine_v<E>) {
            for (auto const& w : _engine->equivalence_class(x)) {
              if (_automaton->contains_any(w)) {
                return Membership::in;
              }
            }
            return Membership::out;
          }
          break;
        case Mode::bounded:
          if constexpr (is_word_engine_v<E>) {
            return _bounded->count(x) ? Membership::in : Membership::unknown;
          }
          break;
      }
      return Membership::unknown;
    }

    bool is_empty() const {
      return _representation == Representation::generated ? _generators.empty()
                                                           : _members.empty();
    }

    //! An ideal containing the identity is the whole monoid.
    Membership is_full() const {
      return contains(_engine->identity());
    }

    //! The empty ideal and the whole monoid.
    bool is_improper() const {
      return is_empty() || is_full() == Membership::in;
    }

    //! Factor automaton over the generators when membership is decided by
    //! factor search (free engines, and presented ones without rules); null
    //! otherwise.
    AhoCorasick const* factor_automaton() const noexcept {
      return _mode == Mode::factors ? _automaton.get() : nullptr;
    }

    std::string describe() const {
      if (_representation == Representation::generated) {
        return "I(" + format_elements(*_engine, _generators) + ")";
      }
      return format_elements(*_engine, _members);
    }

   private:
    enum class Mode { mask, sorted_set, everything, factors, class_search, bounded };

    using hash_type
        = std::conditional_t<is_finite_engine_v<E>, std::hash<std::size_t>, WordHash>;

    IdealSet(std::shared_ptr<E const> engine, std::size_t radius)
        : _engine(std::move(engine)), _radius(radius) {}

    void set_members(std::vector<element_type> members) {
      _members = std::move(members);
      if constexpr (is_finite_engine_v<E>) {
        _mode = Mode::mask;
        _mask.assign(_engine->size(), false);
        for (auto x : _members) {
          _mask[x] = true;
        }
        _cached_ball = _members;
      } else {
        _mode = Mode::sorted_set;
        for (auto const& x : _engine->ball(_radius).elements) {
          if (contains(x) == Membership::in) {
            _cached_ball.push_back(x);
          }
        }
      }
    }

    // Breadth-first closure of the generators under multiplication on both
    // sides by every element of a universe known to be the whole monoid.
    void close_explicitly(std::vector<element_type> const& universe) {
      std::unordered_set<element_type, hash_type> members(_generators.begin(),
                                                          _generators.end());
      std::queue<element_type> queue;
      for (auto const& x : _generators) {
        queue.push(x);
      }
      while (!queue.empty()) {
        auto q = queue.front();
        queue.pop();
        for (auto const& m : universe) {
          for (auto y : {_engine->multiply(q, m), _engine->multiply(m, q)}) {
            if (members.insert(y).second) {
              queue.push(y);
            }
          }
        }
      }
      std::vector<element_type> sorted(members.begin(), members.end());
      sort_unique<E>(sorted);
      set_members(std::move(sorted));
    }

    void prepare_generated() {
      bool const has_identity
          = std::find(_generators.begin(), _generators.end(), _engine->identity())
            != _generators.end();
      auto const ball = _engine->ball(_radius);
      if (has_identity) {
        _mode = Mode::everything;
      } else if constexpr (is_free_engine_v<E>) {
        _automaton = std::make_shared<AhoCorasick const>(_engine->alphabet().size(),
                                                         _generators);
        _mode      = Mode::factors;
      } else {
        if (ball.exhaustive && _engine->exact_equality()) {
          close_explicitly(ball.elements);
          return;
        } else if (_engine->rules().empty() && _engine->confluent()) {
          _automaton = std::make_shared<AhoCorasick const>(_engine->alphabet().size(),
                                                           _generators);
          _mode      = Mode::factors;
        } else if (_engine->homogeneous()) {
          _automaton = std::make_shared<AhoCorasick const>(_engine->alphabet().size(),
                                                           _generators);
          _mode      = Mode::class_search;
        } else {
          auto bounded = std::make_shared<std::unordered_set<word_type, WordHash>>();
          for (auto const& g : _generators) {
            for (auto const& u : ball.elements) {
              auto ug = _engine->multiply(u, g);
              for (auto const& v : ball.elements) {
                bounded->insert(_engine->multiply(ug, v));
              }
            }
          }
          // An ideal that contains the identity is the whole monoid.
          _mode = bounded->count(_engine->identity()) ? Mode::everything : Mode::bounded;
          _bounded = std::move(bounded);
        }
      }
      for (auto const& x : ball.elements) {
        if (contains(x) == Membership::in) {
          _cached_ball.push_back(x);
        }
      }
    }

    std::shared_ptr<E const>  _engine;
    std::size_t               _radius         = 0;
    Representation            _representation = Representation::generated;
    Mode                      _mode           = Mode::bounded;
    std::vector<element_type> _generators;
    std::vector<element_type> _members;
    std::vector<element_type> _cached_ball;
    std::vector<bool>         _mask;
    std::shared_ptr<AhoCorasick const>                              _automaton;
    std::shared_ptr<std::unordered_set<word_type, WordHash> const> _bounded;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_IDEAL_SET_HPP_
