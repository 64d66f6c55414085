#pragma once

// Readers and writers for the supported graph file formats:
//   - 9th-DIMACS `.gr` arc lists (`c` comments, `p sp <n> <m>`, `a u v w`,
//     1-based node ids)
//   - plain edge lists (`u v w` per line, 0-based ids, `#` comments,
//     node count inferred as max id + 1)
//   - DIMACS `.co` coordinate files (`v <id> <lon*10^6> <lat*10^6>`)
// Parallel arcs are kept; self-loops and non-positive weights are rejected.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdpwml/graph.hpp"

namespace kdpwml {

// Malformed input (unparseable line, missing header, bad token).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Syntactically valid input carrying an out-of-domain value (weight <= 0,
// node id out of range, self-loop).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph load_dimacs_gr(std::istream& in);
Graph load_edge_list(std::istream& in);

// Returns one coordinate per node; every node must be covered exactly once.
std::vector<LonLat> load_dimacs_co(std::istream& in, NodeId node_count);

void write_dimacs_gr(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs_co(std::ostream& out, const Graph& g);

}  // namespace kdpwml
