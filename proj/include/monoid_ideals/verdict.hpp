// Three-valued membership and the verdicts of bounded universal checks.

#ifndef MONOID_IDEALS_VERDICT_HPP_
#define MONOID_IDEALS_VERDICT_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for int8_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace monoid_ideals {

  //! Doubles as a Kleene truth value: in = true, out = false.
  enum class Membership : std::int8_t { out = 0, in = 1, unknown = 2 };

  inline std::string_view to_string(Membership m) noexcept {
    switch (m) {
      case Membership::in: return "IN";
      case Membership::out: return "OUT";
      case Membership::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  constexpr Membership to_membership(bool b) noexcept {
    return b ? Membership::in : Membership::out;
  }

  constexpr Membership kleene_not(Membership x) noexcept {
    switch (x) {
      case Membership::in: return Membership::out;
      case Membership::out: return Membership::in;
      default: return Membership::unknown;
    }
  }

  constexpr Membership kleene_and(Membership x, Membership y) noexcept {
    if (x == Membership::out || y == Membership::out) {
      return Membership::out;
    }
    if (x == Membership::in && y == Membership::in) {
      return Membership::in;
    }
    return Membership::unknown;
  }

  constexpr Membership kleene_or(Membership x, Membership y) noexcept {
    return kleene_not(kleene_and(kleene_not(x), kleene_not(y)));
  }

  constexpr Membership kleene_implies(Membership x, Membership y) noexcept {
    return kleene_or(kleene_not(x), y);
  }

  constexpr Membership kleene_iff(Membership x, Membership y) noexcept {
    return kleene_and(kleene_implies(x, y), kleene_implies(y, x));
  }

  enum class VerdictKind { holds_exhaustive, holds_up_to_bound, fails, inconclusive };

  inline std::string_view to_string(VerdictKind k) noexcept {
    switch (k) {
      case VerdictKind::holds_exhaustive: return "HOLDS_EXHAUSTIVE";
      case VerdictKind::holds_up_to_bound: return "HOLDS_UP_TO_BOUND";
      case VerdictKind::fails: return "FAILS";
      case VerdictKind::inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
  }

  template <typename TElement>
  struct Verdict {
    using element_type = TElement;

    VerdictKind kind = VerdictKind::inconclusive;
    //! Ball radius the quantifiers ranged over; empty for finite engines.
    std::optional<std::size_t> radius;
    std::vector<TElement>      witness;
    std::string                note;

    bool holds() const noexcept {
      return kind == VerdictKind::holds_exhaustive
             || kind == VerdictKind::holds_up_to_bound;
    }

    bool fails() const noexcept {
      return kind == VerdictKind::fails;
    }

    static Verdict holding(bool exhaustive, std::optional<std::size_t> radius) {
      return Verdict{exhaustive ? VerdictKind::holds_exhaustive
                                : VerdictKind::holds_up_to_bound,
                     radius,
                     {},
                     {}};
    }

    static Verdict failing(std::vector<TElement>      witness,
                           std::optional<std::size_t> radius,
                           std::string                note = {}) {
      return Verdict{VerdictKind::fails, radius, std::move(witness), std::move(note)};
    }

    static Verdict inconclusive(std::optional<std::size_t> radius,
                                std::string                note = {}) {
      return Verdict{VerdictKind::inconclusive, radius, {}, std::move(note)};
    }
  };

  //! Accumulates the outcome of a universal check over a quantifier domain:
  //! the first false instance wins, unknown instances only downgrade.
  template <typename TElement>
  class UniversalCheck {
   public:
    UniversalCheck(bool exhaustive, std::optional<std::size_t> radius)
        : _exhaustive(exhaustive), _radius(radius) {}

    //! Returns true once a counterexample has been recorded.
    bool record(Membership instance, std::vector<TElement> const& witness) {
      if (instance == Membership::out && !_failed) {
        _failed  = true;
        _witness = witness;
      } else if (instance == Membership::unknown) {
        _unknown = true;
      }
      return _failed;
    }

    bool failed() const noexcept {
      return _failed;
    }

    Verdict<TElement> finish(std::string note = {}) const {
      if (_failed) {
        return Verdict<TElement>::failing(_witness, _radius, std::move(note));
      }
      if (_unknown) {
        return Verdict<TElement>::inconclusive(
            _radius,
            note.empty() ? "some memberships could not be decided" : note);
      }
      auto v = Verdict<TElement>::holding(_exhaustive, _radius);
      v.note = std::move(note);
      return v;
    }

   private:
    bool                       _exhaustive;
    std::optional<std::size_t> _radius;
    bool                       _failed  = false;
    bool                       _unknown = false;
    std::vector<TElement>      _witness;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_VERDICT_HPP_
