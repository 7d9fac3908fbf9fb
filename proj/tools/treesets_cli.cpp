#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "treesets/cli.hpp"

int main(int argc, char** argv) {
  using namespace treesets;
  CLI::App app{"Tree sets, their trees, and finitely presented infinite tree sets"};
  app.set_help_flag("-h,--help", "Show help");

  Command cmd;
  std::string format = "json";
  app.add_option("verb", cmd.verb, "Operation to run")->required()->check(CLI::IsMember(verbs()));
  app.add_option("inputs", cmd.inputs, "Input JSON files");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--depth", cmd.depth, "Truncation depth for presented checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cmd.seed, "Seed for randomized runs")->capture_default_str();
  app.add_option("--dot-width", cmd.dot_width, "Maximum DOT label width")->capture_default_str();

  app.add_option("--tree", cmd.tree, "Tree file (roundtrip)");
  app.add_option("--pin", cmd.pin, "Element to keep maximal (orient)");
  app.add_option("--partial", cmd.partial, "Elements of the partial orientation (orient)");
  app.add_option("--element", cmd.element, "Presented element, e.g. e[top]- (splitting, subbase)");
  app.add_option("--from", cmd.from, "Elements of the start orientation (flip-path)");
  app.add_option("--to", cmd.to, "Elements of the target orientation (flip-path)");
  app.add_option("--u", cmd.u, "First vertex descriptor (arc)");
  app.add_option("--v", cmd.v, "Second vertex descriptor (arc)");
  app.add_option("--point", cmd.point, "Vertex descriptor or edge[n]@x (subbase)");
  app.add_option("--r", cmd.r, "Rational in (0,1) (subbase)")->capture_default_str();
  app.add_option("--interval", cmd.intervals, "e, e[top], e[n] or e[lo,hi) (contract)");
  app.add_option("--sub", cmd.sub, "Smaller tree set (minor)");
  app.add_option("--super", cmd.super, "Larger tree set (minor)");
  app.add_option("--inclusion", cmd.inclusion, "Element map from --sub into --super (minor)");
  app.add_option("--model", cmd.model, "Minor model file (minor)");
  app.add_option("--minor", cmd.minor, "Minor tree (minor)");
  app.add_option("--host", cmd.host, "Host tree (minor)");
  app.add_option("--random", cmd.random, "Check this many random trees (roundtrip)");
  app.add_option("--max-edges", cmd.max_edges, "Largest random tree (roundtrip)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  static const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"dot", OutputFormat::dot}, {"text", OutputFormat::text}};
  cmd.format = formats.at(format);

  const Report rep = run(cmd);
  if (rep.exit_code == 2) {
    std::cerr << rep.text;
    if (cmd.format == OutputFormat::json) std::cout << rep.body.dump(2) << "\n";
  } else {
    std::cout << rep.render(cmd.format);
  }
  return rep.exit_code;
}
