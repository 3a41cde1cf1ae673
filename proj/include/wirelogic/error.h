#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wirelogic {

// Base of every error raised by the library. name() is the stable identifier
// printed by the command-line tool ("SyntaxError", "FanOutUnsupported", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define WIRELOGIC_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                          \
   public:                                                             \
    explicit Type(const std::string& message) : Error(#Type, message) {} \
  }

WIRELOGIC_DEFINE_ERROR(InvalidPair);
WIRELOGIC_DEFINE_ERROR(MixedPrecedenceError);
WIRELOGIC_DEFINE_ERROR(MissingVariable);
WIRELOGIC_DEFINE_ERROR(ExplicitCapExceeded);
WIRELOGIC_DEFINE_ERROR(FanOutUnsupported);
WIRELOGIC_DEFINE_ERROR(InvalidGraph);
WIRELOGIC_DEFINE_ERROR(FormatError);
WIRELOGIC_DEFINE_ERROR(InvalidPeriod);
WIRELOGIC_DEFINE_ERROR(LengthMismatch);
WIRELOGIC_DEFINE_ERROR(InvalidParams);
WIRELOGIC_DEFINE_ERROR(LayoutOverflow);

#undef WIRELOGIC_DEFINE_ERROR

// Parse failure with the 1-based column where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("SyntaxError",
              "column " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnsupportedWord : public Error {
 public:
  UnsupportedWord(std::size_t line, const std::string& word)
      : Error("UnsupportedWord",
              "line " + std::to_string(line) + ": unsupported word '" + word +
                  "'"),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wirelogic
