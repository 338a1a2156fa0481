#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "mgcolor/coloring.hpp"
#include "mgcolor/density.hpp"
#include "mgcolor/error.hpp"
#include "mgcolor/factorization.hpp"
#include "mgcolor/graph_io.hpp"
#include "mgcolor/oracle.hpp"
#include "mgcolor/pipeline.hpp"

namespace mgcolor::cli {
namespace {

PipelineConfig ToPipeline(const RunConfig& c) {
  PipelineConfig p;
  p.epsilon = c.epsilon;
  p.desk_scale = c.desk_scale;
  p.seed = c.seed;
  p.enumeration_cap = c.enumeration_cap;
  p.hamilton_exhaustive_cap = c.hamilton_cap;
  p.oracle.edge_cap = c.oracle_cap;
  return p;
}

Multigraph Input(const RunConfig& c) {
  if (c.input.empty()) throw IoError("missing --input graph file");
  return read_graph_file(c.input);
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("write to " + path + " failed");
}

// Classes written colour by colour, one commented block per class.
std::string Blocks(std::span<const Multigraph> classes, const std::vector<std::string>& labels) {
  const EdgeColoring c = coloring_from_classes(classes);
  std::ostringstream ss;
  ss << "colors " << c.colors << '\n';
  for (int color = 1; color <= c.colors; ++color) {
    ss << "# " << labels[static_cast<std::size_t>(color - 1)] << '\n';
    for (const ColoredEdge& ce : c.edges) {
      if (ce.color != color) continue;
      ss << ce.edge.u << ' ' << ce.edge.v << ' ' << ce.edge.copy << ' ' << ce.color << '\n';
    }
  }
  return ss.str();
}

std::string Analyze(const RunConfig& c) {
  const Multigraph g = Input(c);
  const DensityReport d = analyze_density(g, DensityOptions{c.enumeration_cap});
  std::ostringstream ss;
  ss << "omega " << to_string(d.omega) << '\n';
  ss << "chi_f " << to_string(d.chi_f) << '\n';
  ss << "class " << to_string(d.classification) << '\n';
  ss << "witness";
  for (int v : d.classification == OverfullClass::kNone ? d.witness : d.class_witness) ss << ' ' << v;
  ss << '\n';
  return ss.str();
}

std::string Color(const RunConfig& c) {
  const Multigraph g = Input(c);
  const ChromaticResult res = chromatic_index(g, ToPipeline(c));
  if (!c.trace.empty()) {
    std::string text = "method " + res.method + '\n';
    text += "lower_bound " + std::to_string(res.lower_bound) + '\n';
    text += res.trace.to_text();
    WriteFile(c.trace, text);
  }
  return coloring_to_string(res.coloring);
}

std::string Factorize(const RunConfig& c) {
  const Multigraph g = Input(c);
  const FactorizationCertificate cert = one_factorize_regular(g, ToPipeline(c).factor_options());
  if (auto bad = check_factorization(cert)) {
    throw ConstructionError("certificate", *bad, "certificate-invalid");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cert.matchings.size(); ++i) {
    labels.push_back("matching " + std::to_string(i + 1));
  }
  return Blocks(cert.matchings, labels);
}

std::string Decompose(const RunConfig& c) {
  const Multigraph g = Input(c);
  if (g.order() == 0 || !g.is_regular()) throw PreconditionError("not-regular", "G is not regular");
  const FactorOptions opts = ToPipeline(c).factor_options();
  const int r = g.max_multiplicity();
  Decomposition d;
  if (r % 2 == 0) {
    d = decompose_even_r(g, opts);
  } else {
    const int s = r > 0 ? g.degree(0) / r : 0;
    d = s % 2 == 0 ? decompose_odd_r_a(g, opts) : decompose_odd_r_b(g, opts);
  }
  if (auto bad = check_decomposition(g, d)) {
    throw ConstructionError("certificate", *bad, "certificate-invalid");
  }
  std::vector<Multigraph> graphs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    graphs.push_back(d.layers[i].graph);
    labels.push_back("layer " + std::to_string(i + 1) + ' ' + layer_label(d.layers[i]));
  }
  return Blocks(graphs, labels);
}

std::string Oracle(const RunConfig& c) {
  const Multigraph g = Input(c);
  OracleOptions opts;
  opts.edge_cap = c.oracle_cap;
  const OracleResult res = brute_force_chi(g, opts);
  return "chi " + std::to_string(res.chi) + '\n';
}

Multigraph Generate(const RunConfig& c) {
  if (!c.named.empty()) return named_instance(c.named);
  GeneratorSpec spec;
  spec.n = c.n;
  spec.r = c.r;
  spec.target = c.target;
  spec.seed = c.seed;
  if (c.regime == "regular") {
    spec.regime = Regime::kRegular;
    return gen_regular_multigraph(spec);
  }
  spec.regime = Regime::kMinDegree;
  if (c.regime == "min-degree") return gen_min_degree_multigraph(spec);
  if (c.regime == "deficient-dense") return gen_deficient_dense_multigraph(spec);
  throw PreconditionError("unknown-regime", "regime '" + c.regime + "' not in {regular, min-degree, deficient-dense}");
}

int Fail(std::ostream& err, int code, const std::string& what) {
  err << "error: " << what << '\n';
  return code;
}

}  // namespace

std::string validate(const RunConfig& config) {
  if (!(config.epsilon > Rational(0) && config.epsilon < Rational(1))) {
    return "epsilon = " + to_string(config.epsilon) + " violates 0 < epsilon < 1";
  }
  if (config.enumeration_cap <= 0) return "enumeration cap must be > 0";
  if (config.oracle_cap <= 0) return "oracle cap must be > 0";
  if (config.hamilton_cap <= 0) return "hamilton cap must be > 0";
  return {};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (std::string bad = validate(config); !bad.empty()) {
    return Fail(err, kPrecondition, "bad-config: " + bad);
  }
  try {
    const std::string& cmd = config.subcommand;
    std::string text;
    if (cmd == "analyze") {
      text = Analyze(config);
    } else if (cmd == "color") {
      text = Color(config);
    } else if (cmd == "factorize") {
      text = Factorize(config);
    } else if (cmd == "decompose") {
      text = Decompose(config);
    } else if (cmd == "oracle") {
      text = Oracle(config);
    } else if (cmd == "generate") {
      text = graph_to_string(Generate(config));
    } else if (cmd == "verify") {
      const Multigraph g = Input(config);
      if (config.coloring.empty()) throw IoError("missing --coloring file");
      const EdgeColoring col = read_coloring_file(config.coloring);
      if (auto bad = verify_coloring(g, col)) {
        out << "violation " << *bad << '\n';
        return kPrecondition;
      }
      text = "ok colors " + std::to_string(col.colors) + '\n';
    } else {
      return Fail(err, kPrecondition, "unknown-subcommand: '" + cmd + "'");
    }
    if (config.output.empty()) {
      out << text;
    } else {
      WriteFile(config.output, text);
    }
    return kOk;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kPrecondition: return Fail(err, kPrecondition, e.what());
      case ErrorKind::kConstruction: return Fail(err, kConstruction, e.what());
      case ErrorKind::kIo: return Fail(err, kIo, e.what());
    }
    return Fail(err, kConstruction, e.what());
  } catch (const std::exception& e) {
    return Fail(err, kIo, e.what());
  }
}

}  // namespace mgcolor::cli
