#pragma once

#include <cstdint>
#include <string_view>

#include <json.hpp>

#include "levelkit/document.hpp"
#include "levelkit/monomial.hpp"

namespace levelkit {

struct CommandOptions {
  /// socle/oracle: drop vertices with exponent 1. levelable/construct: drop
  /// vertices whose facet is a singleton.
  bool normalize = false;
  std::uint64_t max_box = kDefaultBoxCap;
};

/// Exit codes: 0 success or levelable, 1 not levelable (or oracle mismatch).
/// Errors are thrown as levelkit::Error and map to exit code 2 in the CLI.
struct CommandResult {
  nlohmann::json body;
  int exit_code = 0;
};

enum class Strategy { Pure, Disjoint, Forest, Auto };

/// Throws ParseError for anything other than pure, disjoint, forest or auto.
Strategy parse_strategy(std::string_view name);

CommandResult cmd_socle(const ComplexDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_levelable(const ComplexDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_construct(const ComplexDocument& doc, Strategy strategy, const CommandOptions& opts = {});
CommandResult cmd_family(std::int64_t n);
CommandResult cmd_graph(const GraphDocument& doc);
CommandResult cmd_oracle(const ComplexDocument& doc, const CommandOptions& opts = {});

}  // namespace levelkit
