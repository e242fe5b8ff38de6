// Deliberately naive reference implementations. None of them use the
// library beyond plain data types, so agreement with the library is
// evidence rather than tautology.

#ifndef MONOID_IDEALS_TESTS_ORACLES_HPP_
#define MONOID_IDEALS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

  using word  = std::vector<std::uint32_t>;
  using table = std::vector<std::vector<std::size_t>>;

  // Substring scan.
  inline bool has_factor(word const& pattern, word const& w) {
    if (pattern.size() > w.size()) {
      return false;
    }
    for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i) {
      if (std::equal(pattern.begin(), pattern.end(), w.begin() + i)) {
        return true;
      }
    }
    return false;
  }

  inline bool has_any_factor(std::vector<word> const& patterns, word const& w) {
    return std::any_of(patterns.begin(), patterns.end(),
                       [&](word const& p) { return has_factor(p, w); });
  }

  // All words over k letters of length at most n, shortlex.
  inline std::vector<word> words_up_to(std::size_t k, std::size_t n) {
    std::vector<word> result{{}};
    std::vector<word> level{{}};
    for (std::size_t len = 1; len <= n; ++len) {
      std::vector<word> next;
      for (auto const& w : level) {
        for (std::uint32_t x = 0; x < k; ++x) {
          auto v = w;
          v.push_back(x);
          next.push_back(v);
        }
      }
      result.insert(result.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return result;
  }

  inline word cat(word a, word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  // Applies the first applicable rule at the leftmost position until none
  // applies.
  inline word rewrite(std::vector<std::pair<word, word>> const& rules, word w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < w.size() && !changed; ++i) {
        for (auto const& [l, r] : rules) {
          if (i + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + i)) {
            word v(w.begin(), w.begin() + i);
            v.insert(v.end(), r.begin(), r.end());
            v.insert(v.end(), w.begin() + i + l.size(), w.end());
            w       = std::move(v);
            changed = true;
            break;
          }
        }
      }
    }
    return w;
  }

  inline bool associative(table const& t) {
    auto const n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every table on {0..n-1} with identity 0, by brute force over all
  // fillings of the non-identity cells.
  inline std::vector<table> labelled_monoids(std::size_t n) {
    std::vector<table> result;
    std::size_t const  cells = (n - 1) * (n - 1);
    std::size_t        total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      table t(n, std::vector<std::size_t>(n));
      for (std::size_t x = 0; x < n; ++x) {
        t[0][x] = t[x][0] = x;
      }
      auto c = code;
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
          t[i][j] = c % n;
          c /= n;
        }
      }
      if (associative(t)) {
        result.push_back(std::move(t));
      }
    }
    return result;
  }

  // Number of isomorphism classes, by collecting every relabelling of each
  // table and counting orbits.
  inline std::size_t isomorphism_classes(std::vector<table> const& tables) {
    std::set<table> seen;
    std::size_t     classes = 0;
    for (auto const& t : tables) {
      if (seen.count(t)) {
        continue;
      }
      ++classes;
      auto const               n = t.size();
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        table u(n, std::vector<std::size_t>(n));
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            u[p[x]][p[y]] = p[t[x][y]];
          }
        }
        seen.insert(u);
      } while (std::next_permutation(p.begin() + 1, p.end()));
    }
    return classes;
  }

  // Subset predicates on a finite table; the subset is a bitmask and the
  // identity is element 0.
  inline bool in(std::uint64_t s, std::size_t x) {
    return (s >> x & 1U) != 0;
  }

  inline bool is_ideal(table const& t, std::uint64_t s) {
    for (std::size_t q = 0; q < t.size(); ++q) {
      for (std::size_t m = 0; m < t.size(); ++m) {
        if (in(s, q) && (!in(s, t[q][m]) || !in(s, t[m][q]))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_prime(table const& t, std::uint64_t s) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        if (in(s, t[a][b]) && !in(s, a) && !in(s, b)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_associative(table const& t, std::uint64_t s) {
    for (std::size_t a = 1; a < t.size(); ++a) {
      for (std::size_t b = 1; b < t.size(); ++b) {
        for (std::size_t c = 1; c < t.size(); ++c) {
          if (in(s, t[t[a][b]][c]) && !in(s, t[a][b]) && !in(s, t[b][c])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool is_associative_set(table const& t, std::uint64_t s) {
    for (std::size_t a = 1; a < t.size(); ++a) {
      for (std::size_t b = 1; b < t.size(); ++b) {
        for (std::size_t c = 1; c < t.size(); ++c) {
          if (!in(s, a) || !in(s, b) || !in(s, c)) {
            continue;
          }
          if (in(s, t[t[a][b]][c]) != (in(s, t[a][b]) && in(s, t[b][c]))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool is_strongly_simple(table const& t, std::uint64_t s) {
    for (std::size_t a = 1; a < t.size(); ++a) {
      for (std::size_t b = 1; b < t.size(); ++b) {
        if (in(s, t[a][b]) && (!in(s, a) || !in(s, b))) {
          return false;
        }
      }
    }
    return true;
  }

  // Every ideal, by scanning all 2^n subsets.
  inline std::vector<std::uint64_t> all_ideals(table const& t) {
    std::vector<std::uint64_t> result;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << t.size()); ++s) {
      if (is_ideal(t, s)) {
        result.push_back(s);
      }
    }
    return result;
  }

  // Predicates on free monoid ideals I(G), checked on all words up to length
  // n with membership by substring scan.
  inline bool free_prime(std::size_t k, std::vector<word> const& g, std::size_t n) {
    auto const ws = words_up_to(k, n);
    for (auto const& a : ws) {
      for (auto const& b : ws) {
        if (has_any_factor(g, cat(a, b)) && !has_any_factor(g, a) && !has_any_factor(g, b)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool free_associative(std::size_t k, std::vector<word> const& g, std::size_t n,
                               std::function<bool(word const&)> member = {}) {
    if (!member) {
      member = [&](word const& w) { return has_any_factor(g, w); };
    }
    auto const ws = words_up_to(k, n);
    for (auto const& a : ws) {
      for (auto const& b : ws) {
        for (auto const& c : ws) {
          if (a.empty() || b.empty() || c.empty()) {
            continue;
          }
          auto const ab = cat(a, b);
          if (member(cat(ab, c)) && !member(ab) && !member(cat(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // MONOID_IDEALS_TESTS_ORACLES_HPP_
