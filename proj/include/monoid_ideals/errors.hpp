// Error codes and the exception type thrown by every module.

#ifndef MONOID_IDEALS_ERRORS_HPP_
#define MONOID_IDEALS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace monoid_ideals {

  enum class ErrorCode {
    malformed_table,
    bad_identity,
    non_associative,
    unknown_element,
    rewrite_limit_exceeded,
    limit_exceeded,
    empty_pattern,
    not_homomorphic,
    partial_map,
    not_an_ideal,
    engine_mismatch,
    unsupported_engine,
    empty_subset,
    empty_pairset,
    incomplete_relation,
    non_atomic_generators,
    partial_completion,
    radius_too_small,
    unrepresentable_generator,
    order_too_large,
    scope_mismatch,
    too_many_opens,
    parse_error,
    validation_error,
    unknown_command
  };

  inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::malformed_table: return "MALFORMED_TABLE";
      case ErrorCode::bad_identity: return "BAD_IDENTITY";
      case ErrorCode::non_associative: return "NON_ASSOCIATIVE";
      case ErrorCode::unknown_element: return "UNKNOWN_ELEMENT";
      case ErrorCode::rewrite_limit_exceeded: return "REWRITE_LIMIT_EXCEEDED";
      case ErrorCode::limit_exceeded: return "LIMIT_EXCEEDED";
      case ErrorCode::empty_pattern: return "EMPTY_PATTERN";
      case ErrorCode::not_homomorphic: return "NOT_HOMOMORPHIC";
      case ErrorCode::partial_map: return "PARTIAL_MAP";
      case ErrorCode::not_an_ideal: return "NOT_AN_IDEAL";
      case ErrorCode::engine_mismatch: return "ENGINE_MISMATCH";
      case ErrorCode::unsupported_engine: return "UNSUPPORTED_ENGINE";
      case ErrorCode::empty_subset: return "EMPTY_SUBSET";
      case ErrorCode::empty_pairset: return "EMPTY_PAIRSET";
      case ErrorCode::incomplete_relation: return "INCOMPLETE_RELATION";
      case ErrorCode::non_atomic_generators: return "NON_ATOMIC_GENERATORS";
      case ErrorCode::partial_completion: return "PARTIAL_COMPLETION";
      case ErrorCode::radius_too_small: return "RADIUS_TOO_SMALL";
      case ErrorCode::unrepresentable_generator:
        return "UNREPRESENTABLE_GENERATOR";
      case ErrorCode::order_too_large: return "ORDER_TOO_LARGE";
      case ErrorCode::scope_mismatch: return "SCOPE_MISMATCH";
      case ErrorCode::too_many_opens: return "TOO_MANY_OPENS";
      case ErrorCode::parse_error: return "PARSE_ERROR";
      case ErrorCode::validation_error: return "VALIDATION_ERROR";
      case ErrorCode::unknown_command: return "UNKNOWN_COMMAND";
    }
    return "UNKNOWN";
  }

  //! Resource errors mean a budget ran out, not that the input was bad.
  inline bool is_resource_error(ErrorCode code) noexcept {
    return code == ErrorCode::rewrite_limit_exceeded
           || code == ErrorCode::limit_exceeded
           || code == ErrorCode::partial_completion
           || code == ErrorCode::too_many_opens;
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          _code(code),
          _detail(std::move(detail)) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorCode   _code;
    std::string _detail;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_ERRORS_HPP_
