#include "awplan/topology.hpp"

#include <set>

#include "awplan/iofmt.hpp"

namespace awplan {

std::string_view to_string(Amplifier a) {
  return a == Amplifier::Raman ? "Raman" : "EDFA";
}

Amplifier parse_amplifier(std::string_view text) {
  if (text == "EDFA") return Amplifier::EDFA;
  if (text == "Raman") return Amplifier::Raman;
  throw Error("unknown amplifier '" + std::string(text) + "' (expected EDFA or Raman)");
}

const Node* NetworkTopology::find_node(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

std::vector<Violation> validate_topology(const NetworkTopology& topology) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (const auto& n : topology.nodes) {
    if (n.id.empty()) {
      out.push_back({"EMPTY_NODE_ID", "node with empty id"});
      continue;
    }
    if (!seen.insert(n.id).second) {
      out.push_back({"DUPLICATE_NODE", "duplicate node id '" + n.id + "'"});
    }
  }
  for (std::size_t i = 0; i < topology.spans.size(); ++i) {
    const auto& s = topology.spans[i];
    const std::string where = "span " + std::to_string(i) + " (" + s.from + "-" + s.to + ")";
    for (const auto* end : {&s.from, &s.to}) {
      if (!seen.contains(*end)) {
        out.push_back({"DANGLING_ENDPOINT", where + " references unknown node '" + *end + "'"});
      }
    }
    if (s.from == s.to) {
      out.push_back({"SELF_LOOP", where + " starts and ends on the same node"});
    }
    if (!(s.length_km > 0.0)) {
      out.push_back({"NEGATIVE_LENGTH", where + " length_km must be > 0"});
    }
    if (!(s.attenuation_db > 0.0)) {
      out.push_back({"NEGATIVE_ATTENUATION", where + " attenuation_db must be > 0"});
    }
  }
  return out;
}

NetworkTopology parse_topology(std::string_view document) {
  NetworkTopology topology = topology_from_json(parse_json(document));
  auto violations = validate_topology(topology);
  if (!violations.empty()) {
    throw TopologyError(violations.front().code + ": " + violations.front().message);
  }
  return topology;
}

PathMetrics aggregate_path(const NetworkTopology& topology,
                           std::span<const std::string> node_sequence) {
  if (node_sequence.empty()) throw TopologyError("empty node sequence");

  PathMetrics m;
  for (const auto& id : node_sequence) {
    const Node* node = topology.find_node(id);
    if (node == nullptr) throw TopologyError("unknown node '" + id + "' in path");
    if (node->has_roadm) ++m.roadm_count;
  }
  for (std::size_t i = 0; i + 1 < node_sequence.size(); ++i) {
    const auto& a = node_sequence[i];
    const auto& b = node_sequence[i + 1];
    bool connected = false;
    for (const auto& s : topology.spans) {
      if (!s.joins(a, b)) continue;
      connected = true;
      m.distance_km += s.length_km;
      m.attenuation_db += s.attenuation_db;
      if (s.has_inline_ola) ++m.ola_count;
      if (s.amplifier == Amplifier::Raman) ++m.raman_span_count;
    }
    if (!connected) throw TopologyError("no span connects " + a + " and " + b);
  }
  return m;
}

}  // namespace awplan
