#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mgcolor/coloring.hpp"
#include "mgcolor/multigraph.hpp"

namespace mgcolor {

// Graph text format:
//   # comment
//   n <count>
//   e <u> <v> <mult>      (0-based, u < v, mult >= 1, one line per bundle)
// write_graph emits the canonical form: no comments, bundles in (u, v) order.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Multigraph& g);
std::string graph_to_string(const Multigraph& g);

// Coloring text format:
//   colors <K>
//   <u> <v> <copy_index> <color>
// Comment lines start with '#'.
EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::filesystem::path& path);
void write_coloring(std::ostream& out, const EdgeColoring& c);
std::string coloring_to_string(const EdgeColoring& c);

}  // namespace mgcolor
