#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "treesets/finite_bridge.hpp"
#include "treesets/presentation.hpp"
#include "treesets/separation_system.hpp"
#include "treesets/tree.hpp"

namespace treesets {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ObjectKind { system, tree, presentation };

/// Guesses the kind of a document from its top-level keys. Throws
/// SchemaError.
ObjectKind detect_kind(const Json& doc);

// Decoding throws SchemaError for shape problems and InvariantViolation when
// the decoded object fails its construction checks.
SeparationSystem system_from_json(const Json& doc);
Tree tree_from_json(const Json& doc);
ChainTreePresentation presentation_from_json(const Json& doc);
/// {"branch_sets": {"minorVertex": ["hostVertex", ...]}, "edge_map": {"minorEdge": "hostEdge"}}
MinorModel model_from_json(const Json& doc, const Tree& minor, const Tree& host);
/// {"map": {"x": "y", ...}}: every element of `from` to an element of `to`.
std::vector<ElementIndex> inclusion_from_json(const Json& doc, const SeparationSystem& from,
                                              const SeparationSystem& to);

Json to_json(const SeparationSystem& sys);
Json to_json(const Tree& tree);
Json to_json(const ChainTreePresentation& pres);
Json to_json(const MinorModel& model, const Tree& minor, const Tree& host);

/// Throws ParseError with line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

SeparationSystem load_system(const std::filesystem::path& path);
Tree load_tree(const std::filesystem::path& path);
ChainTreePresentation load_presentation(const std::filesystem::path& path);

}  // namespace treesets
