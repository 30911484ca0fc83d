#pragma once

#include <stdexcept>
#include <string>

namespace tfs {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parse error carrying a 1-based source position.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace tfs
