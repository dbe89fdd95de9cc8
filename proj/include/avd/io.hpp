#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "avd/coloring.hpp"
#include "avd/graph.hpp"

namespace avd::io {

// Graph files:    `# comment`, `vertices N`, then `edge I J` lines.
// Coloring files: `colors K`, then `vcolor V C` and `ecolor I J C` lines (0 = unassigned).
// Blank lines and `#` lines are ignored everywhere. Parse failures throw ParseError.

Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// Colors missing from the file stay 0.
TotalColoring read_coloring(std::istream& in, const Graph& g);
TotalColoring parse_coloring(const std::string& text, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const TotalColoring& f);
std::string format_coloring(const Graph& g, const TotalColoring& f);

/// `vertex V origin center C` / `vertex V origin outer COPY U`,
/// then `edge I J class center|copy C|fan C`.
std::string format_provenance(const Corona& corona);

/// Undirected DOT; vertex and edge labels carry color indices when a coloring is given.
std::string format_dot(const Graph& g, const TotalColoring* f = nullptr);

Graph load_graph(const std::filesystem::path& path);
TotalColoring load_coloring(const std::filesystem::path& path, const Graph& g);
/// Throws ParseError when the file cannot be written.
void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace avd::io
