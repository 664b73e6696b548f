#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geoconv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `offset` is the byte offset of the
/// offending character within the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Orientation enumeration refused because 2^m exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int edges, int budget)
      : Error("graph has " + std::to_string(edges) +
              " edges but the edge budget is " + std::to_string(budget) +
              "; rerun with --budget " + std::to_string(edges) +
              " (2^" + std::to_string(edges) + " orientations)"),
        required_(edges),
        budget_(budget) {}

  int required() const { return required_; }
  int budget() const { return budget_; }

 private:
  int required_;
  int budget_;
};

/// An operation was called on input outside its domain (e.g. a graph with an
/// end-vertex passed to the extreme-free orienter).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace geoconv
