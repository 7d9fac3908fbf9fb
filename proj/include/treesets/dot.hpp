#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treesets/finite_bridge.hpp"
#include "treesets/tls.hpp"
#include "treesets/tree.hpp"

namespace treesets {

inline constexpr std::size_t kDefaultDotWidth = 24;

/// Undirected graph; `vertex_labels` (optional, by vertex) are cut to
/// `width` characters with a trailing "...".
std::string to_dot(const Tree& tree, const std::vector<std::string>& vertex_labels = {},
                   std::size_t width = kDefaultDotWidth);

/// Tree of a tree set with vertices labelled by their orientations and edges
/// by the separation they stand for.
std::string to_dot(const TreeOfTreeSet& t, const SeparationSystem& tau,
                   std::size_t width = kDefaultDotWidth);

/// Sampled part of a presented tree-like space: skeleton vertices, interior
/// cuts up to `depth`, limit edges drawn dashed, and an ellipsis node for
/// each unbounded chain.
std::string to_dot(const PresentedTLS& tls, std::uint64_t depth,
                   std::size_t width = kDefaultDotWidth);

}  // namespace treesets
