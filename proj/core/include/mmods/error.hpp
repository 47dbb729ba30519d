#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmods {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term or triple that breaks a graph invariant (literal subject, non-IRI
/// predicate, malformed IRI).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an input document. Line and column are 1-based; zero when
/// unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token = {})
      : Error(message), line_(line), column_(column), token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// Lookup of a name the vocabulary registry does not know.
class UnknownNameError : public Error {
 public:
  UnknownNameError(const std::string& message, std::string name, std::vector<std::string> candidates)
      : Error(message), name_(std::move(name)), candidates_(std::move(candidates)) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& candidates() const noexcept { return candidates_; }

 private:
  std::string name_;
  std::vector<std::string> candidates_;
};

}  // namespace mmods
