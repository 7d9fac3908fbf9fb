#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treesets/dot.hpp"
#include "treesets/io.hpp"

namespace treesets {

enum class OutputFormat { json, dot, text };

struct Command {
  std::string verb;
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::json;
  std::uint64_t depth = 6;
  std::uint64_t seed = 0;
  std::size_t dot_width = kDefaultDotWidth;

  std::string tree;                   // tree file for roundtrip
  std::string pin;                    // orient
  std::vector<std::string> partial;   // orient
  std::string element;                // splitting, subbase
  std::vector<std::string> from, to;  // flip-path orientations
  std::string u, v;                   // arc
  std::string point;                  // subbase: descriptor or "edge[n]@x"
  std::string r = "1/2";              // subbase
  std::vector<std::string> intervals; // contract
  std::string sub, super, inclusion;  // minor: tree set inclusion
  std::string model, minor, host;     // minor: minor model of trees
  std::size_t random = 0;             // roundtrip on random trees
  std::size_t max_edges = 10;
};

struct Report {
  int exit_code = 0;  // 0 positive, 1 negative, 2 error
  Json body;
  std::string text;
  std::string dot;  // empty when the verb has no graph output

  std::string render(OutputFormat format) const;
};

const std::vector<std::string>& verbs();

/// Never throws: failures, including a DOT request for a verb without graph
/// output, become exit code 2 with an "error" body.
Report run(const Command& cmd);

/// Parses "a/b", an integer or a finite decimal. Throws InvalidCoordinate.
Rational parse_rational(const std::string& text);

/// Uniformly random labelled tree on n vertices v0..v{n-1} from a Pruefer
/// sequence.
Tree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace treesets
