#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Raised for violated preconditions and non-generic input data.
class SchubertError : public std::runtime_error {
 public:
  enum class Kind { InvalidArgument, ResourceLimit, NonGeneric, Construction };

  SchubertError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail_argument(const std::string& msg) {
  throw SchubertError(SchubertError::Kind::InvalidArgument, msg);
}
[[noreturn]] inline void fail_nongeneric(const std::string& msg) {
  throw SchubertError(SchubertError::Kind::NonGeneric, msg);
}
[[noreturn]] inline void fail_construction(const std::string& msg) {
  throw SchubertError(SchubertError::Kind::Construction, msg);
}

}  // namespace schubert
