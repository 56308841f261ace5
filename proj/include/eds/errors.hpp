#pragma once

#include <stdexcept>
#include <string>

namespace eds {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax or range error while reading a text document.  Positions are 1-based.
struct parse_error : error {
  int line;
  int column;
  parse_error(const std::string& msg, int line_, int column_)
      : error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

}  // namespace eds
