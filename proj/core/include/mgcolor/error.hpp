#pragma once

#include <stdexcept>
#include <string>

namespace mgcolor {

// Precondition: the input is outside an operation's stated regime.
// Construction: a constructive step failed on an admissible input.
// Io: unreadable or malformed files.
enum class ErrorKind { kPrecondition, kConstruction, kIo };

// Every failure carries a short machine code ("not-even", "cap-exceeded", ...)
// and, for multi-stage constructions, the stage that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message,
        std::string stage = {})
      : std::runtime_error(Format(code, message, stage)),
        kind_(kind),
        code_(std::move(code)),
        stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  static std::string Format(const std::string& code, const std::string& message,
                            const std::string& stage) {
    std::string out = code;
    if (!stage.empty()) out += " [" + stage + "]";
    if (!message.empty()) out += ": " + message;
    return out;
  }

  ErrorKind kind_;
  std::string code_;
  std::string stage_;
};

inline Error PreconditionError(std::string code, const std::string& message) {
  return Error(ErrorKind::kPrecondition, std::move(code), message);
}

inline Error ConstructionError(std::string stage, const std::string& message,
                               std::string code = "construction-failed") {
  return Error(ErrorKind::kConstruction, std::move(code), message,
               std::move(stage));
}

inline Error IoError(const std::string& message) {
  return Error(ErrorKind::kIo, "io", message);
}

}  // namespace mgcolor
