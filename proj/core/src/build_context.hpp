#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mgcolor/coloring.hpp"
#include "mgcolor/factorization.hpp"
#include "mgcolor/hamilton.hpp"
#include "mgcolor/trace.hpp"

namespace mgcolor::detail {

// Seeds for every randomised sub-step come from one counter, so a run is a
// function of the options alone.
class BuildContext {
 public:
  explicit BuildContext(const FactorOptions& options) : options_(options) {}

  const FactorOptions& options() const { return options_; }
  RegimeConstants constants() const { return options_.constants(); }

  std::uint64_t NextSeed();
  HamiltonOptions Hamilton();
  SearchOptions Search();

  // Appends a stage record to the trace, or to a scratch record without one.
  StageRecord& Note(const std::string& name);

 private:
  FactorOptions options_;
  std::uint64_t counter_ = 0;
  StageRecord scratch_;
};

// Removes a perfect matching of g - avoid from g and returns it.
Multigraph PeelPerfectMatching(Multigraph& g, std::span<const int> avoid, BuildContext& ctx,
                               const std::string& stage);

// Unchecked constructions; r may exceed mu(g).
Decomposition DecomposeEven(const Multigraph& g, int r, BuildContext& ctx);
Decomposition DecomposeOddA(const Multigraph& g, int r, BuildContext& ctx);
Decomposition DecomposeOddB(const Multigraph& g, int r, BuildContext& ctx);
std::vector<Multigraph> FactorizeRegular(const Multigraph& g, BuildContext& ctx);
std::vector<Multigraph> FactorizeSimple(const Multigraph& g, BuildContext& ctx);

// `colors` classes of a proper colouring, by Kempe search then exhaustive
// search; "search-exhausted" tagged with `stage` otherwise.
std::vector<Multigraph> ColorWithSearch(const Multigraph& g, int colors, BuildContext& ctx,
                                        const std::string& stage);

}  // namespace mgcolor::detail
