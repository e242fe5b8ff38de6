// String rewriting under the shortlex order and Knuth-Bendix completion.

#ifndef MONOID_IDEALS_REWRITING_HPP_
#define MONOID_IDEALS_REWRITING_HPP_

#include <algorithm>  // for reverse
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <deque>      // for deque
#include <set>        // for set
#include <string>     // for string, to_string
#include <utility>    // for pair
#include <vector>     // for vector

#include "errors.hpp"
#include "factor_search.hpp"
#include "word.hpp"

namespace monoid_ideals {

  using relation_type = std::pair<word_type, word_type>;

  //! lhs is always shortlex-greater than rhs.
  struct Rule {
    word_type lhs;
    word_type rhs;

    bool operator==(Rule const&) const = default;
  };

  //! Orients an equation so the shortlex-greater side is the left-hand side.
  inline Rule orient(word_type u, word_type v) {
    if (shortlex_less(u, v)) {
      std::swap(u, v);
    }
    return {std::move(u), std::move(v)};
  }

  enum class CompletionStatus { confluent, partial };

  inline std::string_view to_string(CompletionStatus s) noexcept {
    return s == CompletionStatus::confluent ? "CONFLUENT" : "PARTIAL";
  }

  struct CompletionBudget {
    std::size_t max_rules       = 512;
    std::size_t max_word_length = 32;
    //! Rewrite steps allowed per normalisation.
    std::size_t step_budget = 1'000'000;
  };

  class RewritingSystem {
   public:
    RewritingSystem() = default;

    RewritingSystem(std::size_t       alphabet_size,
                    std::vector<Rule> rules,
                    std::size_t       step_budget = 1'000'000)
        : _alphabet_size(alphabet_size),
          _rules(std::move(rules)),
          _step_budget(step_budget) {
      std::vector<word_type> lhs;
      lhs.reserve(_rules.size());
      for (auto const& r : _rules) {
        lhs.push_back(r.lhs);
      }
      _automaton = AhoCorasick(alphabet_size, std::move(lhs));
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }

    std::size_t step_budget() const noexcept {
      return _step_budget;
    }

    //! Rewrites \p w to an irreducible word, always applying the rule whose
    //! left-hand side ends leftmost. Throws REWRITE_LIMIT_EXCEEDED when the
    //! step budget runs out.
    word_type rewrite(word_type const& w) const {
      if (_rules.empty()) {
        return w;
      }
      word_type                             pending(w.rbegin(), w.rend());
      word_type                             out;
      std::vector<AhoCorasick::state_type> states{AhoCorasick::root};
      std::size_t                           steps = 0;
      out.reserve(w.size());
      while (!pending.empty()) {
        letter_type x = pending.back();
        pending.pop_back();
        auto s = _automaton.step(states.back(), x);
        out.push_back(x);
        states.push_back(s);
        auto r = _automaton.longest_match(s);
        if (r != AhoCorasick::npos) {
          if (++steps > _step_budget) {
            throw Error(ErrorCode::rewrite_limit_exceeded,
                        "more than " + std::to_string(_step_budget)
                            + " rewrite steps");
          }
          auto const& rule = _rules[r];
          out.resize(out.size() - rule.lhs.size());
          states.resize(states.size() - rule.lhs.size());
          pending.insert(pending.end(), rule.rhs.rbegin(), rule.rhs.rend());
        }
      }
      return out;
    }

    bool is_irreducible(word_type const& w) const {
      return _rules.empty() || !_automaton.contains_any(w);
    }

   private:
    std::size_t       _alphabet_size = 0;
    std::vector<Rule> _rules;
    std::size_t       _step_budget = 1'000'000;
    AhoCorasick       _automaton;
  };

  struct Completion {
    std::vector<Rule> rules;
    CompletionStatus  status = CompletionStatus::partial;
    //! Which budget stopped a partial completion ("max_rules" or
    //! "max_word_length"); empty when confluent.
    std::string limit;
  };

  //! Knuth-Bendix completion under shortlex with interreduction. Stops with
  //! a partial (but sound) rule set when a budget is hit.
  inline Completion knuth_bendix(std::size_t                       alphabet_size,
                                 std::vector<relation_type> const& relations,
                                 CompletionBudget                  budget = {}) {
    struct Entry {
      Rule          rule;
      std::uint64_t id;
    };
    std::vector<Entry>                           entries;
    std::deque<relation_type>                    pending(relations.begin(), relations.end());
    std::set<std::pair<std::uint64_t, std::uint64_t>> processed;
    std::uint64_t                                next_id = 0;
    RewritingSystem                              system(alphabet_size, {}, budget.step_budget);
    Completion                                   result;

    auto rebuild = [&]() {
      std::vector<Rule> rules;
      rules.reserve(entries.size());
      for (auto const& e : entries) {
        rules.push_back(e.rule);
      }
      system = RewritingSystem(alphabet_size, std::move(rules), budget.step_budget);
    };

    auto finish = [&](CompletionStatus status, std::string limit) {
      for (auto const& e : entries) {
        result.rules.push_back(e.rule);
      }
      result.status = status;
      result.limit  = std::move(limit);
      return result;
    };

    while (true) {
      while (!pending.empty()) {
        auto [u, v] = std::move(pending.front());
        pending.pop_front();
        u = system.rewrite(u);
        v = system.rewrite(v);
        if (u == v) {
          continue;
        }
        Rule rule = orient(std::move(u), std::move(v));
        if (rule.lhs.size() > budget.max_word_length) {
          return finish(CompletionStatus::partial, "max_word_length");
        }
        // Rules whose left-hand side the new rule reduces go back to the
        // equation queue.
        std::vector<Entry> kept;
        for (auto& e : entries) {
          if (is_factor(rule.lhs, e.rule.lhs)) {
            pending.emplace_back(std::move(e.rule.lhs), std::move(e.rule.rhs));
          } else {
            kept.push_back(std::move(e));
          }
        }
        entries = std::move(kept);
        entries.push_back({std::move(rule), next_id++});
        rebuild();
        for (auto& e : entries) {
          e.rule.rhs = system.rewrite(e.rule.rhs);
        }
        rebuild();
        if (entries.size() > budget.max_rules) {
          return finish(CompletionStatus::partial, "max_rules");
        }
      }

      for (auto const& a : entries) {
        for (auto const& b : entries) {
          if (!processed.emplace(a.id, b.id).second) {
            continue;
          }
          auto const& l1 = a.rule.lhs;
          auto const& l2 = b.rule.lhs;
          std::size_t const max_overlap = std::min(l1.size(), l2.size());
          for (std::size_t k = 1; k < max_overlap; ++k) {
            if (!std::equal(l1.end() - k, l1.end(), l2.begin())) {
              continue;
            }
            // l1 = p·o and l2 = o·s with |o| = k.
            word_type x(a.rule.rhs);
            x.insert(x.end(), l2.begin() + k, l2.end());
            word_type y(l1.begin(), l1.end() - k);
            y.insert(y.end(), b.rule.rhs.begin(), b.rule.rhs.end());
            pending.emplace_back(std::move(x), std::move(y));
          }
        }
      }
      if (pending.empty()) {
        return finish(CompletionStatus::confluent, "");
      }
    }
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_REWRITING_HPP_
