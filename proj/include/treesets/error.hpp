#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treesets {

enum class ErrorCode {
  unknown_element,
  not_a_partial_order,
  involution_clash,
  double_oriented,
  co_trivial_element,
  pin_trivial,
  pin_not_maximal,
  inconsistent_input,
  inconsistent_orientation,
  too_large,
  invalid_tree,
  not_a_tree_set,
  not_regular,
  not_splitting,
  not_a_subset,
  invalid_model,
  invalid_index,
  not_tame,
  invalid_coordinate,
  unknown_descriptor,
  invalid_interval_set,
  invalid_argument,
  parse_error,
  schema_error,
  invariant_violation,
  construction_failed,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` names the
// failing contract so callers can dispatch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace treesets
