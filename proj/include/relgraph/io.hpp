#pragma once

#include <iosfwd>
#include <string>

#include "relgraph/graph.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

// Graph file:
//   graph <n>
//   <u> <v>          one edge per line, "<v> <v>" is a loop
// Relation file:
//   relation <domain size> <image size>
//   <x> <b>          one pair per line
// Blank lines and lines starting with '#' are skipped, except that
// "# vertex <i> = <label>" comments in a graph file restore vertex labels.
// Duplicate lines collapse. Errors throw ErrorKind::parse with
// "<source>:<line>: " in front of the message.
Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Relation parse_relation(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
Relation read_relation_file(const std::string& path);

// Sorted output; graphs with labels that differ from their indices get a
// "# vertex <i> = <label>" table after the edges.
void write_graph(std::ostream& out, const Graph& g);
void write_relation(std::ostream& out, const Relation& r);
std::string format_graph(const Graph& g);
std::string format_relation(const Relation& r);

} // namespace relgraph
