#ifndef SELFSIM_IO_HPP
#define SELFSIM_IO_HPP

#include <iosfwd>
#include <string>

#include "selfsim/coloring.hpp"
#include "selfsim/graph.hpp"

namespace selfsim {

/// Base-graph text format: first line n, then one "i j" edge per line.
BaseGraph parse_base_graph(std::istream& in);

/// Bundle text format: first line n, optional directive line "symmetrize",
/// then "i j" lines meaning i ~ j'.
Bundle parse_bundle(std::istream& in);

/// True when the string names a base-graph preset (currently "kn:<n>").
bool is_base_preset(const std::string& name);
BaseGraph base_preset(const std::string& name);

/// Bundle presets: matching, full, jstar, jr:<r>, mirror, j1..j8 (n = 2).
/// A "preset:" prefix is accepted and stripped.  mirror needs the base.
bool is_bundle_preset(const std::string& name);
Bundle bundle_preset(const std::string& name, const BaseGraph& base);

/// Loads from a preset name when it parses as one, else from a file path.
BaseGraph load_base_graph(const std::string& source);
Bundle load_bundle(const std::string& source, const BaseGraph& base);

/// Coloring certificate: line 1 "palette p", then "vertexIndex color" lines.
std::string write_certificate(const Coloring& coloring);
Coloring parse_certificate(std::istream& in);

} // namespace selfsim

#endif
