// Words over a finite alphabet of named generators.

#ifndef MONOID_IDEALS_WORD_HPP_
#define MONOID_IDEALS_WORD_HPP_

#include <algorithm>      // for lexicographical_compare
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <optional>       // for optional
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "errors.hpp"

namespace monoid_ideals {

  using letter_type = std::uint32_t;
  //! The empty word is the identity.
  using word_type = std::vector<letter_type>;

  //! Shortlex: shorter first, then lexicographic by letter index.
  struct ShortlexLess {
    bool operator()(word_type const& x, word_type const& y) const noexcept {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
  };

  inline bool shortlex_less(word_type const& x, word_type const& y) noexcept {
    return ShortlexLess()(x, y);
  }

  struct WordHash {
    std::size_t operator()(word_type const& w) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : w) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h ^ w.size();
    }
  };

  inline word_type concat(word_type const& x, word_type const& y) {
    word_type result;
    result.reserve(x.size() + y.size());
    result.insert(result.end(), x.begin(), x.end());
    result.insert(result.end(), y.begin(), y.end());
    return result;
  }

  inline bool is_factor(word_type const& pattern, word_type const& w) {
    if (pattern.size() > w.size()) {
      return false;
    }
    return std::search(w.begin(), w.end(), pattern.begin(), pattern.end())
           != w.end();
  }

  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (_names[i].empty()) {
          throw Error(ErrorCode::validation_error,
                      "generator names must be non-empty");
        }
        auto [it, inserted]
            = _index.emplace(_names[i], static_cast<letter_type>(i));
        if (!inserted) {
          throw Error(ErrorCode::validation_error,
                      "duplicate generator name \"" + _names[i] + "\"");
        }
      }
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(letter_type x) const {
      return _names.at(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<letter_type> find(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    letter_type letter(std::string_view name) const {
      auto x = find(name);
      if (!x) {
        throw Error(ErrorCode::unknown_element,
                    "\"" + std::string(name) + "\" is not a generator");
      }
      return *x;
    }

    word_type word(std::vector<std::string> const& names) const {
      word_type w;
      w.reserve(names.size());
      for (auto const& n : names) {
        w.push_back(letter(n));
      }
      return w;
    }

    std::vector<std::string> names_of(word_type const& w) const {
      std::vector<std::string> result;
      result.reserve(w.size());
      for (auto x : w) {
        result.push_back(name(x));
      }
      return result;
    }

    bool contains(word_type const& w) const noexcept {
      return std::all_of(
          w.begin(), w.end(), [this](letter_type x) { return x < size(); });
    }

    //! Human rendering: letters concatenated when every name is a single
    //! character, dot-separated otherwise; the empty word prints as "ε".
    std::string format(word_type const& w) const {
      if (w.empty()) {
        return "ε";
      }
      bool const short_names = std::all_of(
          _names.begin(), _names.end(), [](auto const& n) { return n.size() == 1; });
      std::string result;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0 && !short_names) {
          result += '.';
        }
        result += name(w[i]);
      }
      return result;
    }

    bool operator==(Alphabet const& that) const {
      return _names == that._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, letter_type> _index;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_WORD_HPP_
