// levelable-kit: socle, h-vector and levelability of A(Δ, a_1, ..., a_n).
//
//   levelable-kit <socle|levelable|construct|family|graph|oracle>
//                 [--normalize] [--strategy S] [--max-box N] <file|->

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "levelkit/commands.hpp"
#include "levelkit/error.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw levelkit::Error(levelkit::ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int report_error(const std::string& kind, const std::string& message) {
  nlohmann::json err{{"error", kind}, {"message", message}};
  std::cerr << levelkit::render(err);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Socle, h-vector and levelability of monomial artinian algebras A(Δ, a)"};
  app.require_subcommand(1);

  levelkit::CommandOptions opts;
  std::string input;
  std::string strategy = "auto";
  std::int64_t family_n = 0;

  auto add_common = [&](CLI::App* sub, bool with_box) {
    sub->add_flag("--normalize", opts.normalize, "apply the reduction before computing");
    if (with_box) sub->add_option("--max-box", opts.max_box, "cap on exponent-box points")->check(CLI::PositiveNumber);
    sub->add_option("input", input, "JSON document path, or - for standard input")->required();
  };

  auto* socle = app.add_subcommand("socle", "h-vector, socle-vector and inverse-system generators");
  add_common(socle, false);
  auto* levelable = app.add_subcommand("levelable", "decide levelability with an exact solver");
  add_common(levelable, false);
  auto* construct = app.add_subcommand("construct", "build a level tuple for pure, disjoint or forest complexes");
  add_common(construct, false);
  construct->add_option("--strategy", strategy, "pure, disjoint, forest or auto")
      ->check(CLI::IsMember({"pure", "disjoint", "forest", "auto"}));
  auto* family = app.add_subcommand("family", "print the non-levelable complex on n >= 5 vertices");
  family->add_option("n", family_n, "number of vertices")->required();
  auto* graph = app.add_subcommand("graph", "independence complex and last Betti module of a graph");
  graph->add_option("input", input, "JSON document path, or - for standard input")->required();
  auto* oracle = app.add_subcommand("oracle", "compare the brute-force socle with the facet formula");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    levelkit::CommandResult result;
    if (*family) {
      result = levelkit::cmd_family(family_n);
    } else if (*graph) {
      result = levelkit::cmd_graph(levelkit::parse_graph_document(read_input(input)));
    } else {
      const auto doc = levelkit::parse_complex_document(read_input(input));
      if (*socle) {
        result = levelkit::cmd_socle(doc, opts);
      } else if (*levelable) {
        result = levelkit::cmd_levelable(doc, opts);
      } else if (*construct) {
        result = levelkit::cmd_construct(doc, levelkit::parse_strategy(strategy), opts);
      } else {
        result = levelkit::cmd_oracle(doc, opts);
      }
    }
    std::cout << levelkit::render(result.body);
    return result.exit_code;
  } catch (const levelkit::Error& e) {
    std::string message = e.what();
    if (e.kind() == levelkit::ErrorKind::SingletonFacet) message += " (hint: rerun with --normalize)";
    return report_error(std::string(levelkit::to_string(e.kind())), message);
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what());
  }
}
