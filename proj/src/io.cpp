#include "kdpwml/io.hpp"

#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kdpwml {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected unsigned integer, got '" + tok + "'");
  }
  if (pos != tok.size() || tok[0] == '-') {
    throw ParseError(line, "expected unsigned integer, got '" + tok + "'");
  }
  return value;
}

double parse_double(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected number, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "expected number, got '" + tok + "'");
  return value;
}

void check_arc(NodeId tail, NodeId head, double w, std::size_t line) {
  if (tail == head) throw DomainError(line, "self-loop");
  if (!std::isfinite(w) || w <= 0.0) throw DomainError(line, "non-positive weight");
}

// Weights round-trip exactly: shortest decimal form.
void write_weight(std::ostream& out, double w) {
  std::ostringstream oss;
  oss.precision(17);
  oss << w;
  std::string s = oss.str();
  // Prefer the shorter representation when it parses back identically.
  std::ostringstream shorter;
  shorter.precision(15);
  shorter << w;
  if (std::stod(shorter.str()) == w) s = shorter.str();
  out << s;
}

}  // namespace

Graph load_dimacs_gr(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "sp") {
        throw ParseError(lineno, "expected 'p sp <nodes> <arcs>'");
      }
      n = parse_uint(tokens[2], lineno);
      m = parse_uint(tokens[3], lineno);
      if (n > std::numeric_limits<NodeId>::max()) throw DomainError(lineno, "node count too large");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (tokens[0] == "a") {
      if (!have_header) throw ParseError(lineno, "arc before problem line");
      if (tokens.size() != 4) throw ParseError(lineno, "expected 'a <tail> <head> <weight>'");
      const std::uint64_t u = parse_uint(tokens[1], lineno);
      const std::uint64_t v = parse_uint(tokens[2], lineno);
      const double w = parse_double(tokens[3], lineno);
      if (u < 1 || u > n || v < 1 || v > n) throw DomainError(lineno, "node id out of range");
      check_arc(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w, lineno);
      edges.push_back({static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w});
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + tokens[0] + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing problem line");
  if (edges.size() != m) {
    throw ParseError(lineno, "declared " + std::to_string(m) + " arcs, found " +
                                 std::to_string(edges.size()));
  }
  return Graph(static_cast<NodeId>(n), std::move(edges));
}

Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) throw ParseError(lineno, "expected '<tail> <head> <weight>'");
    const std::uint64_t u = parse_uint(tokens[0], lineno);
    const std::uint64_t v = parse_uint(tokens[1], lineno);
    const double w = parse_double(tokens[2], lineno);
    if (u > std::numeric_limits<NodeId>::max() - 1 || v > std::numeric_limits<NodeId>::max() - 1) {
      throw DomainError(lineno, "node id too large");
    }
    check_arc(static_cast<NodeId>(u), static_cast<NodeId>(v), w, lineno);
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    max_id = std::max({max_id, u, v});
    any = true;
  }
  const NodeId n = any ? static_cast<NodeId>(max_id + 1) : 0;
  return Graph(n, std::move(edges));
}

std::vector<LonLat> load_dimacs_co(std::istream& in, NodeId node_count) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<LonLat> coords(node_count, LonLat{0.0, 0.0});
  std::vector<char> seen(node_count, 0);
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c" || tokens[0] == "p") continue;
    if (tokens[0] != "v") throw ParseError(lineno, "unknown line type '" + tokens[0] + "'");
    if (tokens.size() != 4) throw ParseError(lineno, "expected 'v <id> <lon> <lat>'");
    const std::uint64_t id = parse_uint(tokens[1], lineno);
    const double lon_micro = parse_double(tokens[2], lineno);
    const double lat_micro = parse_double(tokens[3], lineno);
    if (id < 1 || id > node_count) throw DomainError(lineno, "node id out of range");
    if (seen[id - 1]) throw DomainError(lineno, "duplicate coordinate for node " + std::to_string(id));
    seen[id - 1] = 1;
    coords[id - 1] = {lon_micro / 1e6, lat_micro / 1e6};
  }
  for (NodeId i = 0; i < node_count; ++i) {
    if (!seen[i]) {
      throw ParseError(lineno, "missing coordinate for node " + std::to_string(i + 1));
    }
  }
  return coords;
}

void write_dimacs_gr(std::ostream& out, const Graph& g) {
  out << "p sp " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "a " << (e.tail + 1) << ' ' << (e.head + 1) << ' ';
    write_weight(out, e.weight);
    out << '\n';
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) {
    out << e.tail << ' ' << e.head << ' ';
    write_weight(out, e.weight);
    out << '\n';
  }
}

void write_dimacs_co(std::ostream& out, const Graph& g) {
  if (!g.has_coordinates()) throw std::logic_error("graph has no coordinates");
  out << "p aux sp co " << g.node_count() << '\n';
  for (NodeId n = 0; n < g.node_count(); ++n) {
    const LonLat& c = g.coordinate(n);
    out << "v " << (n + 1) << ' ' << std::llround(c.lon * 1e6) << ' ' << std::llround(c.lat * 1e6)
        << '\n';
  }
}

}  // namespace kdpwml
