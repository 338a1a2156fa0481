#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgcolor/multigraph.hpp"

namespace mgcolor {

struct SearchOptions {
  std::uint64_t seed = 1;
  std::int64_t step_budget = 400'000;
  int restarts = 16;
};

// Tries to colour g with `colors` colours: greedy pass, then Kempe-chain
// swaps with random ejection for the edges that remain. Returns the colour
// classes or nullopt when the budget runs out. Requires colors >= Delta.
std::optional<std::vector<Multigraph>> kempe_color(const Multigraph& g, int colors,
                                                   const SearchOptions& options = {});

struct ExactOptions {
  std::int64_t node_budget = 50'000'000;
};

enum class ExactStatus { kColored, kImpossible, kBudget };

struct ExactResult {
  ExactStatus status = ExactStatus::kBudget;
  std::vector<Multigraph> classes;
  std::int64_t nodes = 0;
};

// Exhaustive search for a `colors`-colouring. Each colour class is taken to
// be a maximal matching containing the lowest remaining edge and covering
// every vertex whose degree equals the number of colours left; failed states
// are memoised.
ExactResult exact_color(const Multigraph& g, int colors, const ExactOptions& options = {});

}  // namespace mgcolor
