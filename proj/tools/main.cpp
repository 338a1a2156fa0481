#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"
#include "mgcolor/error.hpp"

namespace {

using mgcolor::cli::RunConfig;

void Caps(CLI::App* sub, RunConfig& c) {
  sub->add_option("--enumeration-cap", c.enumeration_cap, "Largest order for odd-subset enumeration");
  sub->add_option("--oracle-cap", c.oracle_cap, "Largest edge-copy count for the exact oracle");
  sub->add_option("--hamilton-cap", c.hamilton_cap, "Largest order for exhaustive Hamilton search");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  std::string epsilon = "1/2";

  CLI::App app{"Edge colouring of dense multigraphs"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"analyze", "Density, fractional chromatic index and overfull class"},
      {"color", "Edge colouring via the dispatcher"},
      {"factorize", "1-factorization of a dense regular multigraph"},
      {"decompose", "Layer decomposition of a regular multigraph"},
      {"verify", "Check a colouring against a graph"},
      {"oracle", "Exact chromatic index by exhaustive search"},
      {"generate", "Write a seeded or named instance"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--output", c.output, "Output file (default stdout)");
    sub->add_option("--seed", c.seed, "Seed for every random choice");
    Caps(sub, c);
    sub->callback([&c, name = std::string(s.name)] { c.subcommand = name; });
    if (std::string(s.name) == "generate") {
      sub->add_option("--named", c.named, "petersen, q_star(3), folded_complete(8,2), ...");
      sub->add_option("--regime", c.regime, "regular, min-degree or deficient-dense")
          ->check(CLI::IsMember({"regular", "min-degree", "deficient-dense"}));
      sub->add_option("--n", c.n, "Order");
      sub->add_option("--r", c.r, "Multiplicity bound");
      sub->add_option("--target", c.target, "Degree k (regular) or minimum degree");
      continue;
    }
    sub->add_option("--input", c.input, "Graph file")->required();
    if (std::string(s.name) == "verify") {
      sub->add_option("--coloring", c.coloring, "Colouring file")->required();
    }
    if (std::string(s.name) != "analyze" && std::string(s.name) != "verify" &&
        std::string(s.name) != "oracle") {
      sub->add_option("--epsilon", epsilon, "Density slack as p/q in (0,1)");
      sub->add_flag("--desk-scale", c.desk_scale, "Use the small-instance constants");
    }
    if (std::string(s.name) == "color") {
      sub->add_option("--trace", c.trace, "Write the stage trace here");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mgcolor::cli::kIo;
  }

  try {
    c.epsilon = mgcolor::parse_rational(epsilon);
  } catch (const std::exception& e) {
    std::cerr << "error: bad --epsilon '" << epsilon << "': " << e.what() << '\n';
    return mgcolor::cli::kIo;
  }
  return mgcolor::cli::run(c, std::cout, std::cerr);
}
