#ifndef KRASNER_ERROR_HPP
#define KRASNER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace krasner {

enum class ErrorKind {
  domain,
  capacity,
  structural,
  axiom_violation,
  precondition,
  construction,
  parse,
  validation,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::structural: return "structural";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::construction: return "construction";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
  }
  return "unknown";
}

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace krasner

#endif  // KRASNER_ERROR_HPP
