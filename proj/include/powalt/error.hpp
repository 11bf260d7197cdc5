#pragma once

#include <stdexcept>
#include <string>

namespace powalt {

  enum class ErrorCode {
    parse_error,
    input_error,
    budget_exceeded,
    unsupported_word_problem,
    unsupported_membership,
    not_elliptic,
    not_loxodromic,
    no_intersection_oracle,
    not_a_stabiliser,
    cyclic_fact_dependency
  };

  // Stable kebab-case name used in reports and exit messages.
  std::string code_name(ErrorCode code);

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(code_name(code) + ": " + what), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  // Parse errors carry the offending token and its byte offset.
  class ParseError : public Error {
   public:
    ParseError(std::string const& token, std::size_t pos, std::string const& msg)
        : Error(ErrorCode::parse_error,
                msg + " at position " + std::to_string(pos) + " (token '"
                    + token + "')"),
          _token(token),
          _pos(pos) {}

    std::string const& token() const noexcept {
      return _token;
    }
    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::string _token;
    std::size_t _pos;
  };

}  // namespace powalt
