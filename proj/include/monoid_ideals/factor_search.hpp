// Multi-pattern factor search over words (Aho-Corasick automaton).
//
// The automaton is a trie of the patterns with failure links folded into a
// dense transition table, so that stepping is a single lookup. Every state
// also records the longest pattern that is a suffix of the string it spells,
// which is what the rewriting engine needs, and a link to the next state
// carrying output, which is what enumeration of all occurrences needs.

#ifndef MONOID_IDEALS_FACTOR_SEARCH_HPP_
#define MONOID_IDEALS_FACTOR_SEARCH_HPP_

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <limits>     // for numeric_limits
#include <queue>      // for queue
#include <tuple>      // for tie
#include <vector>     // for vector

#include "errors.hpp"
#include "word.hpp"

namespace monoid_ideals {

  struct Occurrence {
    std::size_t pattern;
    std::size_t position;

    bool operator==(Occurrence const&) const = default;
    bool operator<(Occurrence const& that) const noexcept {
      return std::tie(position, pattern) < std::tie(that.position, that.pattern);
    }
  };

  class AhoCorasick {
   public:
    using state_type                    = std::uint32_t;
    static constexpr state_type root    = 0;
    static constexpr std::size_t npos   = std::numeric_limits<std::size_t>::max();

    AhoCorasick() : AhoCorasick(0, {}) {}

    AhoCorasick(std::size_t alphabet_size, std::vector<word_type> patterns)
        : _alphabet_size(alphabet_size), _patterns(std::move(patterns)) {
      for (auto const& p : _patterns) {
        if (p.empty()) {
          throw Error(ErrorCode::empty_pattern, "patterns must be non-empty words");
        }
      }
      build();
    }

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }

    std::vector<word_type> const& patterns() const noexcept {
      return _patterns;
    }

    std::size_t state_count() const noexcept {
      return _nodes.size();
    }

    state_type step(state_type s, letter_type x) const noexcept {
      if (x >= _alphabet_size) {
        return root;
      }
      return _goto[s * _alphabet_size + x];
    }

    //! Index of the longest pattern that is a suffix of the string spelled
    //! by \p s (smallest index among equal patterns), or npos.
    std::size_t longest_match(state_type s) const noexcept {
      return _nodes[s].longest;
    }

    bool matches(state_type s) const noexcept {
      return _nodes[s].longest != npos;
    }

    bool contains_any(word_type const& w) const noexcept {
      state_type s = root;
      for (auto x : w) {
        s = step(s, x);
        if (matches(s)) {
          return true;
        }
      }
      return false;
    }

    //! All occurrences, sorted by (position, pattern index).
    std::vector<Occurrence> find_all(word_type const& w) const {
      std::vector<Occurrence> result;
      state_type              s = root;
      for (std::size_t i = 0; i < w.size(); ++i) {
        s = step(s, w[i]);
        for (state_type t = _nodes[s].out.empty() ? _nodes[s].dict : s;
             t != none;
             t = _nodes[t].dict) {
          for (auto p : _nodes[t].out) {
            result.push_back({p, i + 1 - _patterns[p].size()});
          }
        }
      }
      std::sort(result.begin(), result.end());
      return result;
    }

   private:
    static constexpr state_type none = std::numeric_limits<state_type>::max();

    struct Node {
      std::vector<std::size_t> out;
      state_type               fail    = root;
      state_type               dict    = none;
      std::size_t              longest = npos;
      std::size_t              depth   = 0;
    };

    void build() {
      _nodes.assign(1, Node());
      _goto.assign(_alphabet_size, none);
      for (std::size_t p = 0; p < _patterns.size(); ++p) {
        state_type s = root;
        for (auto x : _patterns[p]) {
          if (x >= _alphabet_size) {
            throw Error(ErrorCode::unknown_element,
                        "pattern letter outside the alphabet");
          }
          if (_goto[s * _alphabet_size + x] == none) {
            auto t = static_cast<state_type>(_nodes.size());
            _goto[s * _alphabet_size + x] = t;
            _nodes.push_back(Node());
            _nodes.back().depth = _nodes[s].depth + 1;
            _goto.resize(_goto.size() + _alphabet_size, none);
          }
          s = _goto[s * _alphabet_size + x];
        }
        _nodes[s].out.push_back(p);
      }

      std::queue<state_type> queue;
      for (std::size_t x = 0; x < _alphabet_size; ++x) {
        auto& t = _goto[x];
        if (t == none) {
          t = root;
        } else {
          _nodes[t].fail = root;
          queue.push(t);
        }
      }
      set_outputs(root);
      while (!queue.empty()) {
        state_type s = queue.front();
        queue.pop();
        set_outputs(s);
        for (std::size_t x = 0; x < _alphabet_size; ++x) {
          auto& t = _goto[s * _alphabet_size + x];
          if (t == none) {
            t = _goto[_nodes[s].fail * _alphabet_size + x];
          } else {
            _nodes[t].fail = _goto[_nodes[s].fail * _alphabet_size + x];
            queue.push(t);
          }
        }
      }
    }

    // Called in BFS order, so the failure target is already resolved.
    void set_outputs(state_type s) {
      auto& node = _nodes[s];
      if (s != root) {
        auto const& f = _nodes[node.fail];
        node.dict     = f.out.empty() ? f.dict : node.fail;
      }
      if (!node.out.empty()) {
        node.longest = *std::min_element(node.out.begin(), node.out.end());
      } else if (node.dict != none) {
        node.longest = _nodes[node.dict].longest;
      }
    }

    std::size_t             _alphabet_size;
    std::vector<word_type>  _patterns;
    std::vector<Node>       _nodes;
    std::vector<state_type> _goto;
  };

  //! Every occurrence of any pattern as a contiguous factor of \p w.
  inline std::vector<Occurrence> factor_search(std::vector<word_type> const& patterns,
                                               word_type const&              w) {
    letter_type max_letter = 0;
    for (auto const& p : patterns) {
      for (auto x : p) {
        max_letter = std::max(max_letter, x);
      }
    }
    for (auto x : w) {
      max_letter = std::max(max_letter, x);
    }
    return AhoCorasick(static_cast<std::size_t>(max_letter) + 1, patterns)
        .find_all(w);
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_FACTOR_SEARCH_HPP_
