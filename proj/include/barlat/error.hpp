#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace barlat {

enum class ErrorKind {
  InvalidBar,
  InvalidArgument,
  InvalidLabel,
  InvalidScale,
  InvalidQ,
  NotStrict,
  NotKStrict,
  NotCanonical,
  NotAnElement,
  ShapeMismatch,
  TooLarge,
  DegenerateBar,
  PreconditionFailed,
  RetriesExhausted,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace barlat
