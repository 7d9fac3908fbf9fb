#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treesets/orientation.hpp"
#include "treesets/separation_system.hpp"
#include "treesets/tree.hpp"

namespace treesets {

// Names the orientation of `edge` running from edge.u to edge.v (forward)
// or back.
using OrientedEdgeNamer = std::function<std::string(const Tree&, EdgeIndex, bool forward)>;

/// The edge tree set of a tree: oriented edges with (x,y)* = (y,x) and
/// (x,y) < (v,w) iff the edges differ and the path between them joins y to v.
///
/// Separation i is tree edge i; its first orientation runs edge.u -> edge.v.
/// Default element names are "(u,v)".
SeparationSystem edge_tree_set(const Tree& tree);
SeparationSystem edge_tree_set(const Tree& tree, const OrientedEdgeNamer& namer);

/// The tree of a finite regular tree set. Vertices are its consistent
/// orientations (all splitting in the finite case), one edge per separation.
struct TreeOfTreeSet {
  Tree tree;
  std::vector<Orientation> orientations;   // by tree vertex
  std::vector<std::string> labels;         // canonical "{a,b,...}" listing
  std::vector<SeparationIndex> edge_separation;  // by tree edge
  std::vector<VertexIndex> vertex_of_element;    // O(x) for each element x

  std::optional<VertexIndex> vertex_of(const Orientation& o) const;
};

/// Throws NotATreeSet or NotRegular; throws ConstructionFailed if the result
/// is not a tree.
TreeOfTreeSet tree_of(const SeparationSystem& tau);

/// Walk from `from` to `to` flipping, at each step, the unique maximal
/// element whose inverse lies in `to`. Throws NotSplitting.
std::vector<Orientation> flip_path(const SeparationSystem& tau, const Orientation& from,
                                   const Orientation& to);

struct TreeSetIso {
  SeparationSystem source;
  SeparationSystem target;
  std::vector<ElementIndex> forward;  // source element -> target element
  IsomorphismVerdict verdict;
  bool certified = false;
};

struct TreeIso {
  Tree source;
  Tree target;
  std::vector<VertexIndex> forward;
  bool certified = false;
};

/// tau -> edge_tree_set(tree_of(tau)) via x |-> (O(x*), O(x)), re-verified by
/// check_isomorphism.
TreeSetIso roundtrip_tau(const SeparationSystem& tau);

/// T -> tree_of(edge_tree_set(T)) via v |-> O((w,v)) for a neighbour w,
/// re-verified edge by edge.
TreeIso roundtrip_tree(const Tree& tree);

/// Verifies a map between trees is a bijection on vertices preserving edges
/// in both directions.
bool is_tree_isomorphism(std::span<const VertexIndex> forward, const Tree& a, const Tree& b);

/// Contraction-only minor model: every host vertex lies in exactly one
/// connected branch set, and each minor edge maps to a host edge joining the
/// corresponding branch sets.
struct MinorModel {
  std::vector<std::vector<VertexIndex>> branch_sets;  // by minor vertex
  std::vector<EdgeIndex> edge_map;                    // by minor edge
};

/// Returns a description of the first violated invariant, if any.
std::optional<std::string> minor_model_problem(const MinorModel& model, const Tree& minor,
                                               const Tree& host, bool require_cover = true);

struct SubsetMinor {
  TreeOfTreeSet minor;
  TreeOfTreeSet host;
  MinorModel model;
};

/// For tau1 included in tau2 via `inclusion` (tau1 element -> tau2 element),
/// models tree_of(tau1) as a minor of tree_of(tau2) by contracting the host
/// edges outside the image. Throws NotASubset.
SubsetMinor subset_minor(const SeparationSystem& tau1, const SeparationSystem& tau2,
                         std::span<const ElementIndex> inclusion);

/// Injects edge_tree_set(minor) into edge_tree_set(host) along the model's
/// edge map and certifies it onto its image. Throws InvalidModel.
TreeSetIso minor_subset(const MinorModel& model, const Tree& minor, const Tree& host);

}  // namespace treesets
