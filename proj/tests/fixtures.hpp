#ifndef MONOID_IDEALS_TESTS_FIXTURES_HPP_
#define MONOID_IDEALS_TESTS_FIXTURES_HPP_

#include <memory>
#include <string>
#include <vector>

#include "monoid_ideals/finite_monoid.hpp"
#include "monoid_ideals/free_monoid.hpp"
#include "monoid_ideals/presented_monoid.hpp"

namespace fixtures {

  using namespace monoid_ideals;

  // E, a, z with a·a = z and z absorbing.
  inline std::shared_ptr<FiniteMonoid const> fm3() {
    return std::make_shared<FiniteMonoid const>(
        FiniteMonoid::make({"E", "a", "z"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {1}));
  }

  // {E, a} with a·a = a.
  inline std::shared_ptr<FiniteMonoid const> idempotent2() {
    return std::make_shared<FiniteMonoid const>(
        FiniteMonoid::make({"E", "a"}, 0, {{0, 1}, {1, 1}}, {1}));
  }

  // {E, a} with a·a = E.
  inline std::shared_ptr<FiniteMonoid const> cyclic2() {
    return std::make_shared<FiniteMonoid const>(
        FiniteMonoid::make({"E", "a"}, 0, {{0, 1}, {1, 0}}, {1}));
  }

  inline std::shared_ptr<FiniteMonoid const> trivial() {
    return std::make_shared<FiniteMonoid const>(FiniteMonoid::make({"E"}, 0, {{0}}));
  }

  inline std::shared_ptr<FreeMonoid const> free(std::vector<std::string> names) {
    return std::make_shared<FreeMonoid const>(Alphabet(std::move(names)));
  }

  // ⟨a, b | ab = E⟩.
  inline std::shared_ptr<PresentedMonoid const> bicyclic() {
    return std::make_shared<PresentedMonoid const>(
        PresentedMonoid::complete(Alphabet({"a", "b"}), {{word_type{0, 1}, word_type{}}}));
  }

  // ⟨a, b | ba = ab⟩.
  inline std::shared_ptr<PresentedMonoid const> commutative() {
    return std::make_shared<PresentedMonoid const>(
        PresentedMonoid::complete(Alphabet({"a", "b"}), {{word_type{1, 0}, word_type{0, 1}}}));
  }

  inline word_type w(std::string const& letters) {
    word_type result;
    for (char c : letters) {
      result.push_back(static_cast<letter_type>(c - 'a'));
    }
    return result;
  }

}  // namespace fixtures

#endif  // MONOID_IDEALS_TESTS_FIXTURES_HPP_
