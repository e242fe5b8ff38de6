// Memoised evaluation of "is x1·x2·...·xk in S" for ball elements x_i.
//
// Every bounded check in this library quantifies over tuples of ball
// elements and asks whether their product lies in some set. A
// ProductMachine turns this into a walk over states: start() is the empty
// product, step(s, i) multiplies on the right by the i-th ball element and
// accept(s) gives the membership of the product. States are interned, so
// repeated prefixes are computed once.
//
// On free engines (and presented ones without rules), when every leaf of the set formula is an ideal decided by
// factor search, a state is the tuple of automaton states of the leaves
// rather than the product word itself. The number of such states is tiny, so
// the machine is a small DFA and each step is a table lookup.

#ifndef MONOID_IDEALS_PRODUCT_MACHINE_HPP_
#define MONOID_IDEALS_PRODUCT_MACHINE_HPP_

#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t, int8_t
#include <limits>         // for numeric_limits
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "ball.hpp"
#include "element_set.hpp"
#include "engine.hpp"
#include "factor_search.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  template <MonoidEngine E>
  class ProductMachine {
   public:
    using element_type = element_of<E>;
    using state_type   = std::uint32_t;

    //! Cap on memoised transitions (entries, not bytes).
    static constexpr std::size_t transition_cap = std::size_t(1) << 24;

    ProductMachine(ElementSet<E> const& set, ElementBall<element_type> const& ball)
        : _set(set), _engine(set.engine()), _ball(ball) {
      if constexpr (is_word_engine_v<E>) {
        _factor_mode = true;
        for (auto const* leaf : set.leaves()) {
          if (leaf->op != ElementSet<E>::Op::ideal
              || (leaf->ideal->factor_automaton() == nullptr
                  && leaf->ideal->is_full() != Membership::in)) {
            _factor_mode = false;
            break;
          }
          _leaf_ideals.push_back(leaf->ideal.get());
        }
      }
      if (_factor_mode) {
        word_type initial;
        for (auto const* ideal : _leaf_ideals) {
          initial.push_back(ideal->factor_automaton() == nullptr ? matched : AhoCorasick::root);
        }
        _start = intern_tuple(std::move(initial));
      } else if constexpr (!is_finite_engine_v<E>) {
        _start = intern_element(_engine.identity());
      }
      if constexpr (is_finite_engine_v<E>) {
        _start = static_cast<state_type>(_engine.identity());
        _accept.assign(_engine.size(), unset);
      }
    }

    ElementBall<element_type> const& ball() const noexcept {
      return _ball;
    }

    state_type start() const noexcept {
      return _start;
    }

    state_type step(state_type s, std::size_t i) {
      if constexpr (is_finite_engine_v<E>) {
        return static_cast<state_type>(_engine.multiply(s, _ball.elements[i]));
      } else {
        if (s < _rows.size() && !_rows[s].empty() && _rows[s][i] != none) {
          return _rows[s][i];
        }
        state_type t = _factor_mode ? step_tuple(s, i) : intern_element(_engine.multiply(_elements[s], _ball.elements[i]));
        if (s >= _rows.size()) {
          _rows.resize(s + 1);
        }
        if (_rows[s].empty() && _row_entries + _ball.size() <= transition_cap) {
          _rows[s].assign(_ball.size(), none);
          _row_entries += _ball.size();
        }
        if (!_rows[s].empty()) {
          _rows[s][i] = t;
        }
        return t;
      }
    }

    Membership accept(state_type s) {
      if (s >= _accept.size()) {
        _accept.resize(s + 1, unset);
      }
      if (_accept[s] == unset) {
        _accept[s] = static_cast<std::int8_t>(compute_accept(s));
      }
      return static_cast<Membership>(_accept[s]);
    }

    //! Convenience: membership of the product of the ball elements with the
    //! given indices.
    Membership product_in(std::initializer_list<std::size_t> indices) {
      state_type s = _start;
      for (auto i : indices) {
        s = step(s, i);
      }
      return accept(s);
    }

   private:
    static constexpr state_type   none    = std::numeric_limits<state_type>::max();
    static constexpr letter_type  matched = std::numeric_limits<letter_type>::max();
    static constexpr std::int8_t  unset   = -1;

    Membership compute_accept(state_type s) {
      if constexpr (is_finite_engine_v<E>) {
        return _set.contains(s);
      } else {
        if (_factor_mode) {
          std::vector<Membership> values;
          values.reserve(_leaf_ideals.size());
          for (auto x : _tuples[s]) {
            values.push_back(to_membership(x == matched));
          }
          return _set.evaluate(values);
        }
        return _set.contains(_elements[s]);
      }
    }

    state_type intern_tuple(word_type tuple) {
      auto [it, inserted] = _tuple_index.emplace(tuple, static_cast<state_type>(_tuples.size()));
      if (inserted) {
        _tuples.push_back(std::move(tuple));
      }
      return it->second;
    }

    state_type intern_element(element_type x) {
      if constexpr (is_finite_engine_v<E>) {
        return static_cast<state_type>(x);
      } else {
        auto [it, inserted]
            = _element_index.emplace(x, static_cast<state_type>(_elements.size()));
        if (inserted) {
          _elements.push_back(std::move(x));
        }
        return it->second;
      }
    }

    state_type step_tuple(state_type s, std::size_t i) {
      word_type   tuple = _tuples[s];
      auto const& w     = _ball.elements[i];
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (tuple[k] == matched) {
          continue;
        }
        auto const* automaton = _leaf_ideals[k]->factor_automaton();
        auto        q         = static_cast<AhoCorasick::state_type>(tuple[k]);
        for (auto x : w) {
          q = automaton->step(q, x);
          if (automaton->matches(q)) {
            q = matched;
            break;
          }
        }
        tuple[k] = q;
      }
      return intern_tuple(std::move(tuple));
    }

    using word_index = std::unordered_map<word_type, state_type, WordHash>;

    ElementSet<E> const&             _set;
    E const&                         _engine;
    ElementBall<element_type> const& _ball;
    bool                             _factor_mode = false;
    std::vector<IdealSet<E> const*>  _leaf_ideals;
    state_type                       _start = 0;

    std::vector<word_type>    _tuples;
    word_index                _tuple_index;
    std::vector<element_type> _elements;
    std::conditional_t<is_finite_engine_v<E>, std::unordered_map<std::size_t, state_type>, word_index>
        _element_index;

    std::vector<std::vector<state_type>> _rows;
    std::size_t                          _row_entries = 0;
    std::vector<std::int8_t>             _accept;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_PRODUCT_MACHINE_HPP_
