// Finite monoids given by their multiplication (Cayley) table.

#ifndef MONOID_IDEALS_FINITE_MONOID_HPP_
#define MONOID_IDEALS_FINITE_MONOID_HPP_

#include <cstddef>        // for size_t
#include <functional>     // for less
#include <optional>       // for optional
#include <queue>          // for queue
#include <string>         // for string, to_string
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "ball.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace monoid_ideals {

  using table_type = std::vector<std::vector<std::size_t>>;

  //! One violated cell or triple found while validating a table.
  struct TableIssue {
    ErrorCode                code;
    std::vector<std::size_t> where;

    std::string describe() const {
      std::string result(to_string(code));
      result += "(";
      for (std::size_t i = 0; i < where.size(); ++i) {
        result += (i == 0 ? "" : ",") + std::to_string(where[i]);
      }
      return result + ")";
    }
  };

  class FiniteMonoid;

  struct FiniteValidation;

  class FiniteMonoid {
   public:
    using element_type = std::size_t;
    using element_less = std::less<std::size_t>;

    //! Checks the identity and associativity axioms and reports every
    //! violated cell or triple. \p generators are element indices; an empty
    //! list means "every non-identity element".
    static FiniteValidation validate(std::vector<std::string> names,
                                     std::size_t              identity,
                                     table_type               table,
                                     std::vector<std::size_t> generators = {});

    static FiniteMonoid make(std::vector<std::string> names,
                             std::size_t              identity,
                             table_type               table,
                             std::vector<std::size_t> generators = {});

    std::size_t size() const noexcept {
      return _names.size();
    }

    element_type identity() const noexcept {
      return _identity;
    }

    element_type multiply(element_type x, element_type y) const {
      return _table[x][y];
    }

    table_type const& table() const noexcept {
      return _table;
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const& name(element_type x) const {
      return _names.at(x);
    }

    std::string format(element_type x) const {
      return name(x);
    }

    bool is_element(element_type x) const noexcept {
      return x < size();
    }

    element_type element(std::string const& name) const {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == name) {
          return i;
        }
      }
      throw Error(ErrorCode::unknown_element, "\"" + name + "\" is not an element");
    }

    std::size_t generator_count() const noexcept {
      return _generators.size();
    }

    element_type generator(std::size_t i) const {
      return _generators.at(i);
    }

    std::vector<element_type> const& generators() const noexcept {
      return _generators;
    }

    std::string const& generator_name(std::size_t i) const {
      return name(generator(i));
    }

    //! Generator names double as the alphabet of words over this monoid.
    Alphabet alphabet() const {
      std::vector<std::string> gens;
      for (auto g : _generators) {
        gens.push_back(_names[g]);
      }
      return Alphabet(std::move(gens));
    }

    //! Value of a word over the generators.
    element_type evaluate(word_type const& w) const {
      element_type x = _identity;
      for (auto l : w) {
        x = multiply(x, generator(l));
      }
      return x;
    }

    //! Shortlex-least word over the generators for every element, or empty
    //! optional when the generators do not reach it.
    std::vector<std::optional<word_type>> const& element_words() const noexcept {
      return _words;
    }

    bool generators_generate() const noexcept {
      for (auto const& w : _words) {
        if (!w) {
          return false;
        }
      }
      return true;
    }

    ElementBall<element_type> ball(std::size_t = 0) const {
      ElementBall<element_type> result;
      result.exhaustive = true;
      result.elements.reserve(size());
      for (std::size_t i = 0; i < size(); ++i) {
        result.elements.push_back(i);
      }
      return result;
    }

    bool exact_equality() const noexcept {
      return true;
    }

    bool operator==(FiniteMonoid const& that) const {
      return _names == that._names && _identity == that._identity
             && _table == that._table && _generators == that._generators;
    }

   private:
    FiniteMonoid() = default;

    void compute_words() {
      _words.assign(size(), std::nullopt);
      _words[_identity] = word_type();
      std::queue<element_type> queue;
      queue.push(_identity);
      while (!queue.empty()) {
        auto x = queue.front();
        queue.pop();
        for (std::size_t i = 0; i < _generators.size(); ++i) {
          auto y = multiply(x, _generators[i]);
          if (!_words[y]) {
            auto w = *_words[x];
            w.push_back(static_cast<letter_type>(i));
            _words[y] = std::move(w);
            queue.push(y);
          }
        }
      }
    }

    std::vector<std::string>              _names;
    element_type                          _identity = 0;
    table_type                            _table;
    std::vector<element_type>             _generators;
    std::vector<std::optional<word_type>> _words;
  };

  struct FiniteValidation {
    std::optional<FiniteMonoid> monoid;
    std::vector<TableIssue>     errors;
  };

  inline FiniteValidation FiniteMonoid::validate(std::vector<std::string> names,
                                                 std::size_t              identity,
                                                 table_type               table,
                                                 std::vector<std::size_t> generators) {
    FiniteValidation  result;
    std::size_t const n = table.size();
    auto malformed      = [&](std::vector<std::size_t> where) {
      result.errors.push_back({ErrorCode::malformed_table, std::move(where)});
    };
    if (n == 0 || names.size() != n || identity >= n) {
      malformed({});
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        malformed({i});
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          malformed({i, j});
        }
      }
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i].empty() || !seen.insert(names[i]).second) {
        malformed({i});
      }
    }
    std::unordered_set<std::size_t> seen_generators;
    for (auto g : generators) {
      if (g >= n || !seen_generators.insert(g).second) {
        malformed({g});
      }
    }
    if (!result.errors.empty()) {
      return result;
    }

    for (std::size_t j = 0; j < n; ++j) {
      if (table[identity][j] != j || table[j][identity] != j) {
        result.errors.push_back({ErrorCode::bad_identity, {j}});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (table[table[i][j]][k] != table[i][table[j][k]]) {
            result.errors.push_back({ErrorCode::non_associative, {i, j, k}});
          }
        }
      }
    }
    if (!result.errors.empty()) {
      return result;
    }

    if (generators.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i != identity) {
          generators.push_back(i);
        }
      }
    }
    FiniteMonoid m;
    m._names      = std::move(names);
    m._identity   = identity;
    m._table      = std::move(table);
    m._generators = std::move(generators);
    m.compute_words();
    result.monoid = std::move(m);
    return result;
  }

  inline FiniteMonoid FiniteMonoid::make(std::vector<std::string> names,
                                         std::size_t              identity,
                                         table_type               table,
                                         std::vector<std::size_t> generators) {
    auto v = validate(std::move(names), identity, std::move(table), std::move(generators));
    if (!v.monoid) {
      std::string detail;
      for (std::size_t i = 0; i < v.errors.size() && i < 8; ++i) {
        detail += (i == 0 ? "" : " ") + v.errors[i].describe();
      }
      if (v.errors.size() > 8) {
        detail += " ... (" + std::to_string(v.errors.size()) + " issues)";
      }
      throw Error(v.errors.front().code, detail);
    }
    return std::move(*v.monoid);
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_FINITE_MONOID_HPP_
