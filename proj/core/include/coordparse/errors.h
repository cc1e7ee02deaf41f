#ifndef COORDPARSE_ERRORS_H_
#define COORDPARSE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace coordparse {

// Malformed input text (bracketed trees, grammar files, configs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Invalid configuration (grammar spec without coordination templates,
// empty grids, inconsistent dimension settings).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with input data at run time (missing files, empty training
// sets, corrupt or version-mismatched model files).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension mismatches in the numeric core.
class ShapeError : public std::logic_error {
 public:
  explicit ShapeError(const std::string& msg) : std::logic_error(msg) {}
};

// Caller broke a documented precondition (out-of-range index, non-scalar
// loss, span outside the sentence).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace coordparse

#endif  // COORDPARSE_ERRORS_H_
