#include "treesets/error.hpp"

namespace treesets {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_element: return "UnknownElement";
    case ErrorCode::not_a_partial_order: return "NotAPartialOrder";
    case ErrorCode::involution_clash: return "InvolutionClash";
    case ErrorCode::double_oriented: return "DoubleOriented";
    case ErrorCode::co_trivial_element: return "CoTrivialElement";
    case ErrorCode::pin_trivial: return "PinTrivial";
    case ErrorCode::pin_not_maximal: return "PinNotMaximalInP";
    case ErrorCode::inconsistent_input: return "InconsistentInput";
    case ErrorCode::inconsistent_orientation: return "InconsistentOrientation";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::invalid_tree: return "InvalidTree";
    case ErrorCode::not_a_tree_set: return "NotATreeSet";
    case ErrorCode::not_regular: return "NotRegular";
    case ErrorCode::not_splitting: return "NotSplitting";
    case ErrorCode::not_a_subset: return "NotASubset";
    case ErrorCode::invalid_model: return "InvalidModel";
    case ErrorCode::invalid_index: return "InvalidIndex";
    case ErrorCode::not_tame: return "NotTame";
    case ErrorCode::invalid_coordinate: return "InvalidCoordinate";
    case ErrorCode::unknown_descriptor: return "UnknownDescriptor";
    case ErrorCode::invalid_interval_set: return "InvalidIntervalSet";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::schema_error: return "SchemaError";
    case ErrorCode::invariant_violation: return "InvariantViolation";
    case ErrorCode::construction_failed: return "ConstructionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace treesets
