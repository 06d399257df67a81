#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "awplan/common.hpp"

namespace awplan {

enum class Amplifier { EDFA, Raman };

std::string_view to_string(Amplifier a);
Amplifier parse_amplifier(std::string_view text);

struct Node {
  std::string id;
  std::string name;
  bool has_roadm = false;

  bool operator==(const Node&) const = default;
};

/// One fibre segment of the host network. Optical line amplifier sites are
/// not graph nodes: a segment ending on an OLA carries `has_inline_ola`, and
/// a ROADM-to-ROADM line through k OLAs is stored as k+1 spans joining the
/// same two nodes.
struct Span {
  std::string from;
  std::string to;
  double length_km = 0.0;
  double attenuation_db = 0.0;
  Amplifier amplifier = Amplifier::EDFA;
  bool dcm_present = false;
  bool has_inline_ola = false;

  bool joins(std::string_view a, std::string_view b) const {
    return (from == a && to == b) || (from == b && to == a);
  }

  bool operator==(const Span&) const = default;
};

/// Immutable once built. Spans are bidirectional.
struct NetworkTopology {
  std::vector<Node> nodes;
  std::vector<Span> spans;

  const Node* find_node(std::string_view id) const;

  bool operator==(const NetworkTopology&) const = default;
};

/// Aggregated metrics of a node sequence, one field per column of the
/// production link table.
struct PathMetrics {
  double distance_km = 0.0;
  double attenuation_db = 0.0;
  int ola_count = 0;
  int roadm_count = 0;
  int raman_span_count = 0;

  bool operator==(const PathMetrics&) const = default;
};

/// Empty iff every node and span invariant holds. Codes: EMPTY_NODE_ID,
/// DUPLICATE_NODE, DANGLING_ENDPOINT, SELF_LOOP, NEGATIVE_LENGTH,
/// NEGATIVE_ATTENUATION.
std::vector<Violation> validate_topology(const NetworkTopology& topology);

/// Parses a topology document (JSON text) and rejects it if any invariant
/// fails. Throws ParseError on schema problems and TopologyError otherwise.
NetworkTopology parse_topology(std::string_view document);

/// Sums every span joining each consecutive node pair. ROADMs are counted
/// per traversed node, so a repeated node counts twice.
PathMetrics aggregate_path(const NetworkTopology& topology,
                           std::span<const std::string> node_sequence);

}  // namespace awplan
