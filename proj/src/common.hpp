#ifndef SKEWRING_COMMON_HPP
#define SKEWRING_COMMON_HPP

#include <stdexcept>
#include <string>

namespace skewring {

// Malformed presentation / word text. Carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Coset enumeration exceeded its limit, or a size cap was hit.
class RealizeError : public std::runtime_error {
 public:
  explicit RealizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-supplied data (Cayley table file, kernel spec, ring spec).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact integer arithmetic over Z left the representable range.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace skewring

#endif
