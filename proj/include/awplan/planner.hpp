#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "awplan/perfmodel.hpp"
#include "awplan/spectrum.hpp"
#include "awplan/topology.hpp"

namespace awplan {

struct Demand {
  std::vector<std::string> path;
  double required_capacity_gbps = 0.0;

  bool operator==(const Demand&) const = default;
};

enum class Strategy { MixedSpectrum, DedicatedPartition };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

/// Measured Q for one uniform-modulation option; takes precedence over the model.
struct QOverride {
  Strategy strategy = Strategy::MixedSpectrum;
  Modulation modulation = Modulation::QPSK;
  double q_db = 0.0;
};

struct PlannerPolicy {
  int guard_band_slots = 2;
  double qpsk_mixed_reach_limit_km = 1000.0;
  int dedicated_edge_carrier_sacrifice = 1;  // 0 or 1
  Thresholds thresholds;
  bool allow_mixed_pair_modulations = false;
  std::vector<QOverride> q_overrides;
};

/// Throws PlanningError if a field is outside its bounds.
void validate_policy(const PlannerPolicy& policy);

using PairModulations = std::array<Modulation, kPairsPerSuperChannel>;

/// Capacity of a super-channel whose first `active_carriers` carriers are lit,
/// filling pairs left to right (a sacrificed carrier comes from the last
/// pair). QPSK carries 50 Gbps per carrier, BPSK 25 Gbps.
double superchannel_capacity(const PairModulations& pair_modulations, int active_carriers);

struct PlanOption {
  Strategy strategy = Strategy::MixedSpectrum;
  PairModulations pair_modulations{};
  int active_carriers = 0;
  double capacity_gbps = 0.0;
  QEstimate q;
  bool feasible = false;
  NeighborConfig neighbors;
  int start_slot = -1;           // super-channel placement on the planning grid
  bool carve_partition = false;  // dedicated block must be carved first
  std::string note;              // why the option is infeasible, or empty
  std::string warning;           // design-threshold warning for Marginal options

  bool operator==(const PlanOption&) const = default;
};

/// What the spectrum offers a new super-channel on this link.
struct GridContext {
  std::optional<int> mixed_start_slot;  // where a mixed placement would go
  NeighborConfig mixed_neighbors;
  std::optional<int> dedicated_start_slot;  // free block inside or for a partition
  bool dedicated_needs_carving = false;
};

/// Mixed placement is first-fit outside partitions honouring the guard band,
/// falling back to no guard band. Dedicated placement prefers a free block in
/// an existing partition, then the lowest carvable 50 GHz-aligned block.
GridContext grid_context_for(const SpectrumGrid& grid, const PlannerPolicy& policy);

std::vector<PlanOption> enumerate_options(const Demand& demand, const PathMetrics& metrics,
                                          const GridContext& context, const QModel& model,
                                          const PlannerPolicy& policy);

struct PlanReport {
  Demand demand;
  PathMetrics metrics;
  PlanOption chosen;
  std::vector<PlanOption> alternatives;
  std::vector<std::string> warnings;
  std::string rationale;
  double native_impact_db = 0.0;
  bool feasible = false;
  std::string calibration_sha256;  // provenance of the model, may be empty

  bool operator==(const PlanReport&) const = default;
};

/// Picks the feasible option with the largest capacity (ties: higher Q, then
/// mixed spectrum). With no feasible option the report carries the option
/// closest to the hard threshold and feasible = false.
PlanReport plan_link(const Demand& demand, const NetworkTopology& topology, const SpectrumGrid& grid,
                     const QModel& model, const PlannerPolicy& policy);

/// Applies the chosen option to the grid: carves its partition if needed and
/// places the super-channel under `sc_id`.
SpectrumGrid commit_plan(const PlanReport& report, const SpectrumGrid& grid,
                         const std::string& sc_id = "AW-1");

/// Codes: Q_BELOW_HARD_MIN, CAPACITY_MISMATCH, PLACEMENT_CONFLICT.
std::vector<Violation> validate_plan(const PlanReport& report, const SpectrumGrid& grid,
                                     const Thresholds& thresholds);

}  // namespace awplan
