#include "walkbound/parse.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "walkbound/errors.hpp"

namespace walkbound {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  size_t hash = line.find('#');
  if (hash != std::string::npos) line.resize(hash);
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

Scalar parse_numeric(const std::string& token, int lineno, bool* any_float) {
  bool forced = false;
  Scalar s;
  try {
    s = parse_scalar(token, &forced);
  } catch (const Error& e) {
    fail(Errc::malformed_line, "line " + std::to_string(lineno) + ": " + e.what());
  }
  if (forced) *any_float = true;
  return s;
}

}  // namespace

ParsedDocument parse_graph(std::istream& in) {
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<Scalar> weights, costs;
  bool any_float = false;
  int columns = 0;  // 0 until the first edge line fixes the schema

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.insert({label, static_cast<int>(labels.size())});
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 4)
      fail(Errc::malformed_line,
           "line " + std::to_string(lineno) + ": expected 'u v [weight [cost]]', got " +
               std::to_string(tokens.size()) + " tokens");
    int cols = static_cast<int>(tokens.size());
    if (columns == 0) columns = cols;
    if (cols != columns)
      fail(Errc::malformed_line, "line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(columns) + " columns like earlier lines, got " +
                                     std::to_string(cols));
    if (tokens[0] == tokens[1])
      fail(Errc::self_loop, "line " + std::to_string(lineno) + ": self-loop at '" + tokens[0] + "'");
    int u = intern(tokens[0]);
    int v = intern(tokens[1]);
    for (const Edge& e : edges) {
      Edge candidate{std::min(u, v), std::max(u, v)};
      if (e == candidate)
        fail(Errc::duplicate_edge, "line " + std::to_string(lineno) + ": duplicate edge {" +
                                       tokens[0] + "," + tokens[1] + "}");
    }
    edges.push_back({u, v});
    if (cols >= 3) weights.push_back(parse_numeric(tokens[2], lineno, &any_float));
    if (cols >= 4) costs.push_back(parse_numeric(tokens[3], lineno, &any_float));
  }
  if (labels.empty()) fail(Errc::malformed_line, "document contains no edges");

  ArithMode mode = any_float ? ArithMode::floating : ArithMode::rational;
  const int n = static_cast<int>(labels.size());
  Graph g(n, std::move(edges), std::move(labels));
  bool weights_given = columns >= 3;
  EdgeWeights w = weights_given ? EdgeWeights(g, std::move(weights)) : EdgeWeights::unit(g);
  if (any_float) w = w.converted(ArithMode::floating);
  std::optional<CostFunction> f;
  if (columns >= 4) {
    f = CostFunction(g, std::move(costs));
    if (any_float) f = f->converted(ArithMode::floating);
  }
  return ParsedDocument{std::move(g), std::move(w), std::move(f), mode, weights_given};
}

ParsedDocument parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

ParsedDocument parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_failure, "cannot open '" + path + "'");
  return parse_graph(in);
}

CostFunction parse_costs(const Graph& g, std::istream& in) {
  std::vector<Scalar> costs(g.edge_count(), Scalar(0));
  std::vector<char> given(g.edge_count(), 0);
  bool any_float = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 3)
      fail(Errc::malformed_line,
           "line " + std::to_string(lineno) + ": expected 'u v cost', got " +
               std::to_string(tokens.size()) + " tokens");
    int u = g.vertex_by_label(tokens[0]);
    int v = g.vertex_by_label(tokens[1]);
    if (u < 0 || v < 0 || g.edge_index(u, v) < 0)
      fail(Errc::malformed_line, "line " + std::to_string(lineno) + ": {" + tokens[0] + "," +
                                     tokens[1] + "} is not an edge of the graph");
    int e = g.edge_index(u, v);
    if (given[e])
      fail(Errc::duplicate_edge, "line " + std::to_string(lineno) + ": cost for {" + tokens[0] +
                                     "," + tokens[1] + "} given twice");
    given[e] = 1;
    costs[e] = parse_numeric(tokens[2], lineno, &any_float);
  }
  CostFunction f(g, std::move(costs));
  if (any_float) f = f.converted(ArithMode::floating);
  return f;
}

CostFunction parse_costs_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_failure, "cannot open '" + path + "'");
  return parse_costs(g, in);
}

std::string emit_edge_list(const Graph& g, const EdgeWeights* w, const CostFunction* f) {
  std::string out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out += g.label(edge.u);
    out += ' ';
    out += g.label(edge.v);
    if (w) {
      out += ' ';
      out += (*w)[e].str();
    }
    if (f) {
      if (!w) fail(Errc::invalid_argument, "cost column requires a weight column");
      out += ' ';
      out += (*f)[e].str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace walkbound
