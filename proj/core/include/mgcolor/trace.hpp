#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "mgcolor/multigraph.hpp"

namespace mgcolor {

// One step of a multi-stage construction. `layers` holds the colour classes
// (or factors) the step hands to the final answer, on the input's vertex set.
struct StageRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Multigraph> layers;

  StageRecord& set(const std::string& key, const std::string& value);
  StageRecord& set(const std::string& key, std::int64_t value);
  // n, e, delta, Delta, mu of g under keys prefixed with `prefix`.
  StageRecord& stats(const std::string& prefix, const Multigraph& g);

  friend bool operator==(const StageRecord&, const StageRecord&) = default;
};

struct PipelineTrace {
  std::deque<StageRecord> stages;
  // Edge copies that were added to the input and must be dropped again.
  Multigraph added;

  StageRecord& add(std::string name);
  // One line per stage: "stage <name> <key>=<value> ...".
  std::string to_text() const;

  friend bool operator==(const PipelineTrace&, const PipelineTrace&) = default;
};

// Sum of every recorded layer minus `added`; equals the input graph for a
// complete trace.
Multigraph recombine(const PipelineTrace& trace, int order);

}  // namespace mgcolor
