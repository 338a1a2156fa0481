#include "mgcolor/trace.hpp"

#include <sstream>

namespace mgcolor {

StageRecord& StageRecord::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : fields) {
    if (k == key) {
      v = value;
      return *this;
    }
  }
  fields.emplace_back(key, value);
  return *this;
}

StageRecord& StageRecord::set(const std::string& key, std::int64_t value) {
  return set(key, std::to_string(value));
}

StageRecord& StageRecord::stats(const std::string& prefix, const Multigraph& g) {
  set(prefix + "n", g.order());
  set(prefix + "e", g.edge_count());
  set(prefix + "delta", g.order() > 0 ? g.min_degree() : 0);
  set(prefix + "Delta", g.order() > 0 ? g.max_degree() : 0);
  set(prefix + "mu", g.max_multiplicity());
  return *this;
}

StageRecord& PipelineTrace::add(std::string name) {
  stages.push_back(StageRecord{std::move(name), {}, {}});
  return stages.back();
}

std::string PipelineTrace::to_text() const {
  std::ostringstream out;
  for (const StageRecord& s : stages) {
    out << "stage " << s.name;
    for (const auto& [k, v] : s.fields) out << ' ' << k << '=' << v;
    if (!s.layers.empty()) out << " layers=" << s.layers.size();
    out << '\n';
  }
  return out.str();
}

Multigraph recombine(const PipelineTrace& trace, int order) {
  Multigraph sum(order);
  for (const StageRecord& s : trace.stages) {
    for (const Multigraph& layer : s.layers) sum = combined(sum, layer);
  }
  if (trace.added.order() == order) sum = remove_layer(sum, trace.added);
  return sum;
}

}  // namespace mgcolor
