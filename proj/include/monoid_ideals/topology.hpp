// The topology on a finite monoid generated by its associative ideals, and
// continuity of multiplication M × M → M in it.

#ifndef MONOID_IDEALS_TOPOLOGY_HPP_
#define MONOID_IDEALS_TOPOLOGY_HPP_

#include <algorithm>      // for sort
#include <bit>            // for popcount
#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <set>            // for set
#include <vector>         // for vector

#include "errors.hpp"
#include "finite_monoid.hpp"
#include "ideal_enumeration.hpp"
#include "predicates.hpp"

namespace monoid_ideals {

  struct ContinuityFailure {
    //! An open set whose preimage is not open.
    element_mask open;
    //! A point of the preimage with no basic neighbourhood N(x) × N(y)
    //! inside it.
    std::size_t x;
    std::size_t y;
  };

  struct TopologyReport {
    std::vector<element_mask>        subbasis;
    //! All open sets, by size and then mask.
    std::vector<element_mask>        opens;
    //! Smallest open set containing each element.
    std::vector<element_mask>        neighbourhood;
    bool                             continuous = true;
    std::optional<ContinuityFailure> failure;
  };

  inline constexpr std::size_t max_opens = std::size_t(1) << 16;

  //! Closes \p subbasis under finite intersections and then arbitrary
  //! unions. Throws TOO_MANY_OPENS past max_opens.
  inline std::vector<element_mask> generate_topology(std::vector<element_mask> const& subbasis) {
    auto close = [](std::set<element_mask> sets, bool intersect) {
      std::vector<element_mask> frontier(sets.begin(), sets.end());
      auto const                generators = frontier;
      while (!frontier.empty()) {
        std::vector<element_mask> next;
        for (auto u : frontier) {
          for (auto v : generators) {
            auto w = intersect ? (u & v) : (u | v);
            if (sets.insert(w).second) {
              if (sets.size() > max_opens) {
                throw Error(ErrorCode::too_many_opens,
                            "the generated topology has more than 65536 open sets");
              }
              next.push_back(w);
            }
          }
        }
        frontier = std::move(next);
      }
      return sets;
    };
    auto basis = close({subbasis.begin(), subbasis.end()}, true);
    auto opens = close(std::move(basis), false);
    std::vector<element_mask> result(opens.begin(), opens.end());
    std::sort(result.begin(), result.end(), [](element_mask a, element_mask b) {
      auto pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    return result;
  }

  //! Subbasis: the associative ideals together with ∅ and M. Multiplication
  //! is continuous iff the preimage of every open U is open in the product
  //! topology, that is every (x, y) with xy ∈ U has N(x) × N(y) mapped into U.
  inline TopologyReport topology_continuity(std::shared_ptr<FiniteMonoid const> const& m) {
    TopologyReport report;
    auto const     n    = m->size();
    element_mask   full = n == 64 ? ~element_mask(0) : (element_mask(1) << n) - 1;
    report.subbasis.push_back(0);
    for (auto mask : all_ideal_masks(*m)) {
      auto ideal = IdealSet<FiniteMonoid>::from_elements(m, mask_elements(mask));
      if (mask != 0 && mask != full && is_associative(ideal, 0).holds()) {
        report.subbasis.push_back(mask);
      }
    }
    report.subbasis.push_back(full);
    report.opens = generate_topology(report.subbasis);
    report.neighbourhood.assign(n, full);
    for (auto u : report.opens) {
      for (std::size_t x = 0; x < n; ++x) {
        if (u >> x & 1U) {
          report.neighbourhood[x] &= u;
        }
      }
    }
    for (auto u : report.opens) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!(u >> m->multiply(x, y) & 1U)) {
            continue;
          }
          for (auto x2 : mask_elements(report.neighbourhood[x])) {
            for (auto y2 : mask_elements(report.neighbourhood[y])) {
              if (!(u >> m->multiply(x2, y2) & 1U)) {
                report.continuous = false;
                report.failure    = ContinuityFailure{u, x, y};
                return report;
              }
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_TOPOLOGY_HPP_
