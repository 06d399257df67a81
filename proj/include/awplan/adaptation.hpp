#pragma once

#include <string>
#include <vector>

#include "awplan/spectrum.hpp"

namespace awplan {

struct PowerReading {
  std::string channel_ref;
  double power_dbm = 0.0;

  bool operator==(const PowerReading&) const = default;
};

struct VoaSetting {
  std::string channel_ref;
  double attenuation_db = 0.0;  // never negative

  bool operator==(const VoaSetting&) const = default;
};

struct EqualizationResult {
  std::vector<VoaSetting> settings;
  double max_residual_db = 0.0;
  std::vector<std::string> clipped_channels;

  bool operator==(const EqualizationResult&) const = default;
};

/// Attenuation-only levelling toward a flat target. Channels already below
/// the target cannot be raised and are reported as clipped.
EqualizationResult compute_voa_settings(const std::vector<PowerReading>& readings, double target_dbm);

struct NodeEqualization {
  std::string node_id;
  EqualizationResult result;
};

struct NodeVerdict {
  std::string node_id;
  bool pass = false;
  double max_residual_db = 0.0;
  std::vector<std::string> clipped_channels;
  std::vector<std::string> unknown_channels;  // refs absent from the grid; informational
};

struct EqualizationSummary {
  std::vector<NodeVerdict> nodes;
  std::vector<std::string> failing_nodes;

  bool all_pass() const { return failing_nodes.empty(); }
};

inline constexpr double kDefaultFlatnessToleranceDb = 1.0;

/// A node passes iff its residual is within tolerance and nothing was clipped.
EqualizationSummary equalization_report(const SpectrumGrid& grid,
                                        const std::vector<NodeEqualization>& results,
                                        double flatness_tolerance_db = kDefaultFlatnessToleranceDb);

}  // namespace awplan
