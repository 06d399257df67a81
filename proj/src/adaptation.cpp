#include "awplan/adaptation.hpp"

#include <algorithm>
#include <cmath>

namespace awplan {

EqualizationResult compute_voa_settings(const std::vector<PowerReading>& readings, double target_dbm) {
  if (readings.empty()) throw AdaptationError("no power readings");
  if (!std::isfinite(target_dbm)) throw AdaptationError("target power must be finite");

  EqualizationResult r;
  r.settings.reserve(readings.size());
  for (const auto& reading : readings) {
    if (!std::isfinite(reading.power_dbm)) {
      throw AdaptationError("non-finite power reading for '" + reading.channel_ref + "'");
    }
    const double excess = reading.power_dbm - target_dbm;
    const double attenuation = std::max(0.0, excess);
    if (excess < 0.0) r.clipped_channels.push_back(reading.channel_ref);
    r.settings.push_back({reading.channel_ref, attenuation});
    r.max_residual_db = std::max(r.max_residual_db, std::abs(reading.power_dbm - attenuation - target_dbm));
  }
  return r;
}

EqualizationSummary equalization_report(const SpectrumGrid& grid,
                                        const std::vector<NodeEqualization>& results,
                                        double flatness_tolerance_db) {
  if (!(flatness_tolerance_db > 0.0)) throw AdaptationError("flatness tolerance must be > 0");
  EqualizationSummary summary;
  for (const auto& node : results) {
    NodeVerdict v;
    v.node_id = node.node_id;
    v.max_residual_db = node.result.max_residual_db;
    v.clipped_channels = node.result.clipped_channels;
    for (const auto& s : node.result.settings) {
      if (!grid.has_occupant(s.channel_ref)) v.unknown_channels.push_back(s.channel_ref);
    }
    v.pass = v.max_residual_db <= flatness_tolerance_db && v.clipped_channels.empty();
    if (!v.pass) summary.failing_nodes.push_back(v.node_id);
    summary.nodes.push_back(std::move(v));
  }
  return summary;
}

}  // namespace awplan
