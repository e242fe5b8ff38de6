// Small finite monoids up to isomorphism.

#ifndef MONOID_IDEALS_CATALOG_HPP_
#define MONOID_IDEALS_CATALOG_HPP_

#include <algorithm>  // for next_permutation, sort
#include <cstddef>    // for size_t
#include <memory>     // for shared_ptr, make_shared
#include <numeric>    // for iota
#include <set>        // for set
#include <string>     // for string
#include <vector>     // for vector

#include "engine.hpp"
#include "errors.hpp"
#include "finite_monoid.hpp"

namespace monoid_ideals {

  inline constexpr std::size_t max_catalog_order = 5;

  //! Element names used for catalog monoids: E, a, b, c, d.
  inline std::vector<std::string> catalog_names(std::size_t n) {
    std::vector<std::string> names{"E"};
    for (std::size_t i = 1; i < n; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    }
    return names;
  }

  //! The table relabelled by \p perm (element x becomes perm[x]).
  inline table_type permute_table(table_type const& t, std::vector<std::size_t> const& perm) {
    table_type result(t.size(), std::vector<std::size_t>(t.size()));
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        result[perm[x]][perm[y]] = perm[t[x][y]];
      }
    }
    return result;
  }

  //! Lexicographically least relabelling over permutations fixing 0.
  inline table_type canonical_table(table_type const& t) {
    std::vector<std::size_t> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    table_type best = t;
    if (t.size() < 2) {
      return best;
    }
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
      auto candidate = permute_table(t, perm);
      if (candidate < best) {
        best = std::move(candidate);
      }
    }
    return best;
  }

  namespace detail {
    // Backtracking over the cells (i, j), i, j ≥ 1, in row-major order.
    // After each assignment every triple whose products are all known is
    // checked for associativity (triples involving 0 always hold).
    class MonoidSearch {
     public:
      explicit MonoidSearch(std::size_t n) : _n(n), _t(n, std::vector<std::size_t>(n, unset)) {
        for (std::size_t x = 0; x < n; ++x) {
          _t[0][x] = x;
          _t[x][0] = x;
        }
      }

      template <typename Callback>
      void run(Callback&& emit) {
        fill(1, 1, emit);
      }

     private:
      static constexpr std::size_t unset = static_cast<std::size_t>(-1);

      bool consistent() const {
        for (std::size_t a = 1; a < _n; ++a) {
          for (std::size_t b = 1; b < _n; ++b) {
            auto const ab = _t[a][b];
            if (ab == unset) {
              continue;
            }
            for (std::size_t c = 1; c < _n; ++c) {
              auto const bc = _t[b][c];
              if (bc == unset) {
                continue;
              }
              auto const l = _t[ab][c];
              auto const r = _t[a][bc];
              if (l != unset && r != unset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Callback>
      void fill(std::size_t i, std::size_t j, Callback& emit) {
        if (i == _n) {
          emit(_t);
          return;
        }
        auto const ni = j + 1 == _n ? i + 1 : i;
        auto const nj = j + 1 == _n ? 1 : j + 1;
        for (std::size_t v = 0; v < _n; ++v) {
          _t[i][j] = v;
          if (consistent()) {
            fill(ni, nj, emit);
          }
        }
        _t[i][j] = unset;
      }

      std::size_t _n;
      table_type  _t;
    };
  }  // namespace detail

  //! Every monoid table on {0, ..., n-1} with identity 0 (labelled, not up
  //! to isomorphism), in lexicographic order.
  inline std::vector<table_type> labelled_monoid_tables(std::size_t n) {
    if (n < 1 || n > max_catalog_order) {
      throw Error(ErrorCode::order_too_large,
                  "monoid enumeration supports orders 1 to " + std::to_string(max_catalog_order));
    }
    std::vector<table_type> result;
    detail::MonoidSearch(n).run([&](table_type const& t) { result.push_back(t); });
    return result;
  }

  //! One canonical table per isomorphism class, in lexicographic order.
  inline std::vector<table_type> monoid_tables(std::size_t n) {
    std::set<table_type> canonical;
    for (auto const& t : labelled_monoid_tables(n)) {
      canonical.insert(canonical_table(t));
    }
    return {canonical.begin(), canonical.end()};
  }

  //! Atoms: non-identity elements with no factorisation u·v = s other than
  //! with u, v ∈ {E, s}.
  inline std::vector<std::size_t> table_atoms(table_type const& t) {
    std::vector<std::size_t> atoms;
    for (std::size_t s = 1; s < t.size(); ++s) {
      bool atom = true;
      for (std::size_t u = 0; u < t.size() && atom; ++u) {
        for (std::size_t v = 0; v < t.size(); ++v) {
          if (t[u][v] == s && !((u == 0 || u == s) && (v == 0 || v == s))) {
            atom = false;
            break;
          }
        }
      }
      if (atom) {
        atoms.push_back(s);
      }
    }
    return atoms;
  }

  //! Monoid with catalog names; its declared generators are its atoms when
  //! they generate, and all non-identity elements otherwise.
  inline std::shared_ptr<FiniteMonoid const> catalog_monoid(table_type const& t) {
    auto const n     = t.size();
    auto       atoms = table_atoms(t);
    auto       m     = FiniteMonoid::make(catalog_names(n), 0, t, atoms);
    if (!atoms.empty() && m.generators_generate()) {
      return std::make_shared<FiniteMonoid const>(std::move(m));
    }
    return std::make_shared<FiniteMonoid const>(FiniteMonoid::make(catalog_names(n), 0, t));
  }

  struct CatalogEntry {
    //! "M<order>.<index>", index from 1 in canonical order.
    std::string                         id;
    std::shared_ptr<FiniteMonoid const> monoid;
  };

  //! All monoids of order \p n up to isomorphism.
  inline std::vector<CatalogEntry> enumerate_finite_monoids(std::size_t n) {
    std::vector<CatalogEntry> result;
    auto const                tables = monoid_tables(n);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      result.push_back({"M" + std::to_string(n) + "." + std::to_string(i + 1),
                        catalog_monoid(tables[i])});
    }
    return result;
  }

  //! All monoids of orders 1 to \p n.
  inline std::vector<CatalogEntry> enumerate_finite_monoids_up_to(std::size_t n) {
    std::vector<CatalogEntry> result;
    for (std::size_t k = 1; k <= n; ++k) {
      auto part = enumerate_finite_monoids(k);
      result.insert(result.end(), part.begin(), part.end());
    }
    return result;
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_CATALOG_HPP_
