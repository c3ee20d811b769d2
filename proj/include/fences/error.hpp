#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fences {

enum class ErrorCode {
  invalid_composition,
  parity,
  element_out_of_range,
  not_an_ideal,
  not_a_filter,
  invalid_encoding,
  length_mismatch,
  precondition,
  negative_entry,
  cap_exceeded,
  not_linear_extension,
  not_a_partition,
  step_invariant,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type.
class FenceError : public std::runtime_error {
 public:
  FenceError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fences
