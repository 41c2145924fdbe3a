#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "walkbound/graph.hpp"

namespace walkbound {

// Edge-list document: one edge per line, `u v [weight [cost]]`. '#' starts a
// comment anywhere on a line; blank lines are skipped. Labels are arbitrary
// non-whitespace tokens and become dense ids in first-appearance order.
// Weights/costs written as integers or "p/q" stay rational; any decimal or
// exponent literal switches the whole document to floating mode. The column
// count must be consistent across edge lines.
struct ParsedDocument {
  Graph graph;
  EdgeWeights weights;          // unit weights when the column is absent
  std::optional<CostFunction> costs;
  ArithMode mode;
  bool weights_given;
};

ParsedDocument parse_graph(std::istream& in);
ParsedDocument parse_graph_string(const std::string& text);
ParsedDocument parse_graph_file(const std::string& path);  // IoFailure when unreadable

// Cost sidecar: lines `u v cost` over edges of an existing graph. Every line
// must name an edge of g; edges not mentioned get cost 0.
CostFunction parse_costs(const Graph& g, std::istream& in);
CostFunction parse_costs_file(const Graph& g, const std::string& path);

// Inverse of parse_graph: emits `u v [weight [cost]]` lines with canonical
// scalar text, one edge per line in edge-index order.
std::string emit_edge_list(const Graph& g, const EdgeWeights* w = nullptr,
                           const CostFunction* f = nullptr);

}  // namespace walkbound
