#ifndef SELFSIM_EXPORT_HPP
#define SELFSIM_EXPORT_HPP

#include <string>

#include "selfsim/explicit_graph.hpp"

namespace selfsim {

enum class ExportFormat { Dot, Graph6, EdgeList, Json };

ExportFormat parse_export_format(const std::string& name);

/// Deterministic byte-for-byte serialization of a graph.
std::string export_graph(const ExplicitGraph& graph, ExportFormat format);

/// Standard graph6 ASCII encoding: size header, then the upper triangle
/// packed column by column into 6-bit groups offset by 63.
std::string to_graph6(const ExplicitGraph& graph);
ExplicitGraph parse_graph6(const std::string& text);

/// One "u v" line per edge over integer encodings, sorted.
std::string to_edge_list(const ExplicitGraph& graph);
ExplicitGraph parse_edge_list(const std::string& text, std::uint64_t vertex_count);

/// Undirected DOT with vertices labeled by dot-joined coordinates.
std::string to_dot(const ExplicitGraph& graph);

std::string to_json(const ExplicitGraph& graph);

} // namespace selfsim

#endif
