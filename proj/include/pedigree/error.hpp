#ifndef PEDIGREE_ERROR_HPP
#define PEDIGREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pedigree {

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An insertion history or tour that violates its invariants. `node` is the
/// offending node label when one can be named, 0 otherwise.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, int node = 0)
      : Error(what), node_(node) {}
  int node() const { return node_; }

 private:
  int node_;
};

/// Malformed text input; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pedigree

#endif  // PEDIGREE_ERROR_HPP
