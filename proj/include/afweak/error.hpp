#pragma once

#include <stdexcept>
#include <string>

namespace afweak {

// Domain error carrying a stable name (NotARoot, ParityViolation, ...).
// The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& detail) {
  throw Error(name, detail);
}

}  // namespace afweak
