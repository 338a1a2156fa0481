#include "mgcolor/graph_io.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <fstream>
#include <sstream>

#include "mgcolor/error.hpp"

namespace mgcolor {

namespace {

bool IsBlankOrComment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

[[noreturn]] void ParseFail(int line_no, const std::string& what) {
  throw IoError("line " + std::to_string(line_no) + ": " + what);
}

// Reads the remaining fields of a line as integers and rejects trailing junk.
template <std::size_t N>
std::array<long long, N> Fields(std::istringstream& ss, int line_no) {
  std::array<long long, N> out{};
  for (auto& x : out) {
    if (!(ss >> x)) ParseFail(line_no, "expected " + std::to_string(N) + " integers");
  }
  std::string extra;
  if (ss >> extra) ParseFail(line_no, "unexpected trailing token '" + extra + "'");
  return out;
}

}  // namespace

Multigraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Multigraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "n") {
      if (g) ParseFail(line_no, "duplicate 'n' line");
      const auto [n] = Fields<1>(ss, line_no);
      if (n < 0 || n > 100000) ParseFail(line_no, "vertex count out of range");
      g.emplace(static_cast<int>(n));
    } else if (tag == "e") {
      if (!g) ParseFail(line_no, "'e' before 'n'");
      const auto [u, v, m] = Fields<3>(ss, line_no);
      if (u < 0 || v >= g->order() || u >= v) ParseFail(line_no, "need 0 <= u < v < n");
      if (m < 1 || m > 1000000) ParseFail(line_no, "multiplicity must be >= 1");
      if (g->mult(static_cast<int>(u), static_cast<int>(v)) != 0) {
        ParseFail(line_no, "duplicate bundle");
      }
      g->set_mult(static_cast<int>(u), static_cast<int>(v), static_cast<int>(m));
    } else {
      ParseFail(line_no, "unknown record '" + tag + "'");
    }
  }
  if (!g) throw IoError("missing 'n <count>' line");
  return *g;
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
  out << "n " << g.order() << '\n';
  for (const Bundle& b : g.bundles()) {
    out << "e " << b.u << ' ' << b.v << ' ' << b.mult << '\n';
  }
}

std::string graph_to_string(const Multigraph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

EdgeColoring read_coloring(std::istream& in) {
  std::string line;
  int line_no = 0;
  EdgeColoring c;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::istringstream ss(line);
    if (!header) {
      std::string tag;
      ss >> tag;
      if (tag != "colors") ParseFail(line_no, "expected 'colors <K>' header");
      const auto [k] = Fields<1>(ss, line_no);
      if (k < 0 || k > 1000000) ParseFail(line_no, "colour count out of range");
      c.colors = static_cast<int>(k);
      header = true;
      continue;
    }
    const auto [u, v, copy, color] = Fields<4>(ss, line_no);
    if (u < 0 || v < 0 || u == v || copy < 0) ParseFail(line_no, "malformed edge copy");
    c.edges.push_back({EdgeCopy(static_cast<int>(u), static_cast<int>(v),
                                static_cast<int>(copy)),
                       static_cast<int>(color)});
  }
  if (!header) throw IoError("missing 'colors <K>' header");
  std::sort(c.edges.begin(), c.edges.end(),
            [](const ColoredEdge& a, const ColoredEdge& b) { return a.edge < b.edge; });
  return c;
}

EdgeColoring read_coloring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << "colors " << c.colors << '\n';
  for (const ColoredEdge& ce : c.edges) {
    out << ce.edge.u << ' ' << ce.edge.v << ' ' << ce.edge.copy << ' ' << ce.color << '\n';
  }
}

std::string coloring_to_string(const EdgeColoring& c) {
  std::ostringstream ss;
  write_coloring(ss, c);
  return ss.str();
}

}  // namespace mgcolor
