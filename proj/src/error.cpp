#include "fences/error.hpp"

namespace fences {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_composition: return "invalid-composition";
    case ErrorCode::parity: return "parity";
    case ErrorCode::element_out_of_range: return "element-out-of-range";
    case ErrorCode::not_an_ideal: return "not-an-ideal";
    case ErrorCode::not_a_filter: return "not-a-filter";
    case ErrorCode::invalid_encoding: return "invalid-encoding";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::negative_entry: return "negative-entry";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::not_linear_extension: return "not-linear-extension";
    case ErrorCode::not_a_partition: return "not-a-partition";
    case ErrorCode::step_invariant: return "step-invariant";
  }
  return "unknown";
}

}  // namespace fences
