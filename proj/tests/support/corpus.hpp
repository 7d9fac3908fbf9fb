#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "treesets/finite_bridge.hpp"
#include "treesets/presentation.hpp"
#include "treesets/separation_system.hpp"
#include "treesets/tree.hpp"

namespace treesets::testing {

/// Every labelled tree on n vertices, one per Pruefer sequence.
std::vector<Tree> all_labelled_trees(std::size_t n);

/// All labelled trees with 0..max_edges edges.
std::vector<Tree> exhaustive_trees(std::size_t max_edges);

std::vector<Tree> random_trees(std::size_t count, std::size_t max_edges, std::uint64_t seed);

/// Same order under fresh element names, shuffled separation order and
/// swapped orientation order; `names_out` receives the new name of every old
/// element.
SeparationSystem relabelled(const SeparationSystem& sys, std::mt19937_64& rng,
                            std::vector<std::string>* names_out = nullptr);

/// Separations (A,B) with A u B = V of a small ground set, ordered by
/// (A,B) <= (C,D) iff A c C and B > D. Such systems live in a universe of
/// separations, so they need not be nested, and may have small, trivial and
/// degenerate elements.
SeparationSystem random_bipartition_system(std::mt19937_64& rng, std::size_t ground,
                                           std::size_t separations);

/// Contracts the host edges flagged in `contract`. Minor vertices are named
/// after the smallest host vertex of their branch set.
struct ContractedMinor {
  Tree minor;
  MinorModel model;
};
ContractedMinor contract_edges(const Tree& host, const std::vector<bool>& contract);

struct EdgeSpec {
  std::string u, v, id;
  LabelKind kind;
  std::uint64_t k;
  std::string start;
};

ChainTreePresentation make_presentation(const std::vector<std::string>& vertices,
                                        const std::vector<EdgeSpec>& edges);

struct NamedPresentation {
  std::string name;
  ChainTreePresentation pres;
  bool tame;  // expected, worked out by hand
};

/// At least twenty presentations covering finite, omega and omega+1 labels
/// in both reading directions on skeletons with one to five edges.
std::vector<NamedPresentation> presentation_suite();

/// The single edge u--v labelled omega+1 from u.
ChainTreePresentation omega_plus_one_example();

}  // namespace treesets::testing
