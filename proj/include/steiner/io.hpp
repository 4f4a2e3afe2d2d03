#pragma once

#include <optional>
#include <string>

#include "steiner/graph.hpp"

namespace steiner {

struct GraphFile {
  Graph graph;
  std::optional<Weight> tau;
};

// Line 1: `n m |T| [tau]`; then m lines `u v w`; then one line of terminal ids.
// `#` starts a comment. Throws InvalidInput on malformed text.
GraphFile parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g, std::optional<Weight> tau = std::nullopt);

// JSON array of {"u","v","w"}.
std::string solution_to_json(const EdgeAdditions& f);
EdgeAdditions parse_solution_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace steiner
