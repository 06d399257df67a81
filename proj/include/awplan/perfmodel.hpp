#pragma once

#include <vector>

#include "awplan/common.hpp"
#include "awplan/spectrum.hpp"
#include "awplan/topology.hpp"

namespace awplan {

/// Empirical Q-value model, linear in dB:
///
///   Q = q_ref[m] - slope[m] * (distance - l_ref)
///       - p_guard[m] * guarded - p_unguard[m] * unguarded
///       - roadm_penalty * roadm_count
///
/// Neighbour penalties vanish inside a dedicated partition.
struct QModel {
  double l_ref_km = 345.0;
  PerModulation<double> q_ref_db;
  PerModulation<double> slope_db_per_km;
  PerModulation<double> p_guard_db;
  PerModulation<double> p_unguard_db;
  double roadm_penalty_db = 0.0;

  bool operator==(const QModel&) const = default;
};

/// Codes: BPSK_NOT_ABOVE_QPSK, NEGATIVE_SLOPE, NEGATIVE_PENALTY.
std::vector<Violation> validate_model(const QModel& model);

struct Thresholds {
  double hard_min_db = 6.5;    // a working signal must be strictly above this
  double design_min_db = 8.5;  // recommended design margin

  bool operator==(const Thresholds&) const = default;
};

enum class QClass { Infeasible, Marginal, Ok };

std::string_view to_string(QClass c);
QClass parse_qclass(std::string_view text);

struct QEstimate {
  double value_db = 0.0;
  QClass klass = QClass::Infeasible;

  bool operator==(const QEstimate&) const = default;
};

struct CalibrationPoint {
  double distance_km = 0.0;
  Modulation modulation = Modulation::QPSK;
  NeighborConfig neighbors;
  double measured_q_db = 0.0;

  bool operator==(const CalibrationPoint&) const = default;
};

/// Solves the model exactly from measurements. Per modulation it needs a
/// clean point at `l_ref_km`, a guarded-only point there and a point with
/// unguarded neighbours there; at least one modulation also needs a clean
/// point at another distance, and a modulation without one inherits the
/// other's slope. Every supplied point must be reproduced within 1e-9 dB.
QModel calibrate(const std::vector<CalibrationPoint>& points, double l_ref_km);

double neighbor_penalty(const QModel& model, const NeighborConfig& neighbors, Modulation m);
QClass classify_q(double value_db, const Thresholds& thresholds = {});
QEstimate estimate_q(const QModel& model, const PathMetrics& metrics, Modulation m,
                     const NeighborConfig& neighbors,
                     const Thresholds& thresholds = Thresholds{});

/// Context of a native IM-DD channel relative to coherent occupants.
struct NativeContext {
  int adjacent_superchannels = 0;
};

/// Penalty imposed on a native channel by coherent neighbours. Always 0: the
/// field trial found no significant effect on IM-DD signals.
double assess_native_impact(const NativeContext& context);

}  // namespace awplan
