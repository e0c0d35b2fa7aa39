#pragma once

#include <stdexcept>
#include <string>

namespace incorp {

// Failure while reading one of the text formats.  line/column are 1-based
// and 0 when unknown; what() carries the formatted position.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

  parse_error with_line(int line) const { return parse_error(message_, line, column_); }

 private:
  static std::string format(const std::string& message, int line, int column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (column > 0) out += "column " + std::to_string(column) + ": ";
    return out + message;
  }

  std::string message_;
  int line_;
  int column_;
};

// Clause evaluated against a valuation that does not cover one of its atoms.
class universe_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Equation evaluated against an algebra with a missing symbol or wrong arity.
class signature_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive valuation enumeration asked for more atoms than the cap allows.
class universe_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The lexicographic termination measure failed to decrease.  This cannot
// happen for a simplifier satisfying the contract laws; seeing it means the
// simplifier in use is broken.
class measure_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace incorp
