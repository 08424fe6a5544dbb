#pragma once

#include "hfs/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hfs {

// Graph text:    "p sub <n> <m>" followed by m lines "e <u> <v>".
// Solution text: "s <t>" followed by t lines "d <u> <v>" in application order.
// Edge set:      "f <t>" followed by t lines "e <u> <v>".
// Vertex set:    "y <t>" followed by t lines "v <x>".
// Lines starting with '#' are comments everywhere; parse_graph can collect their text (marker and padding stripped).

Graph parse_graph(std::istream& in, std::vector<std::string>* comments = nullptr);
void write_graph(std::ostream& out, const Graph& g);

SubdivisionSolution parse_solution(std::istream& in);
void write_solution(std::ostream& out, const SubdivisionSolution& sol);

std::vector<Edge> parse_edge_set(std::istream& in);
void write_edge_set(std::ostream& out, std::vector<Edge> edges);

std::vector<Vertex> parse_vertex_set(std::istream& in);
void write_vertex_set(std::ostream& out, std::vector<Vertex> vertices);

Graph read_graph_file(const std::string& path, std::vector<std::string>* comments = nullptr);
void write_graph_file(const std::string& path, const Graph& g);

/// Convenience for tests: parse from a string.
Graph graph_from_text(const std::string& text);
std::string graph_to_text(const Graph& g);

} // namespace hfs
