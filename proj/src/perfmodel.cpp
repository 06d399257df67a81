#include "awplan/perfmodel.hpp"

#include <cmath>
#include <optional>

namespace awplan {

namespace {

constexpr double kDistanceEps = 1e-9;
constexpr double kResidualTol = 1e-9;

bool clean(const NeighborConfig& n) {
  return n.in_dedicated_partition || (n.guarded_native_count == 0 && n.unguarded_native_count == 0);
}

double predict(const QModel& model, const CalibrationPoint& p) {
  return model.q_ref_db[p.modulation] -
         model.slope_db_per_km[p.modulation] * (p.distance_km - model.l_ref_km) -
         neighbor_penalty(model, p.neighbors, p.modulation);
}

}  // namespace

std::string_view to_string(QClass c) {
  switch (c) {
    case QClass::Infeasible: return "Infeasible";
    case QClass::Marginal: return "Marginal";
    case QClass::Ok: return "Ok";
  }
  return "Infeasible";
}

QClass parse_qclass(std::string_view text) {
  if (text == "Infeasible") return QClass::Infeasible;
  if (text == "Marginal") return QClass::Marginal;
  if (text == "Ok") return QClass::Ok;
  throw Error("unknown Q class '" + std::string(text) + "'");
}

std::vector<Violation> validate_model(const QModel& model) {
  std::vector<Violation> out;
  if (!(model.q_ref_db.bpsk > model.q_ref_db.qpsk)) {
    out.push_back({"BPSK_NOT_ABOVE_QPSK", "reference Q for BPSK must exceed QPSK"});
  }
  for (Modulation m : kModulations) {
    const std::string name(to_string(m));
    if (model.slope_db_per_km[m] < 0.0) {
      out.push_back({"NEGATIVE_SLOPE", name + " distance slope is negative"});
    }
    if (model.p_guard_db[m] < 0.0 || model.p_unguard_db[m] < 0.0) {
      out.push_back({"NEGATIVE_PENALTY", name + " neighbour penalty is negative"});
    }
  }
  if (model.roadm_penalty_db < 0.0) {
    out.push_back({"NEGATIVE_PENALTY", "ROADM penalty is negative"});
  }
  return out;
}

QModel calibrate(const std::vector<CalibrationPoint>& points, double l_ref_km) {
  QModel model;
  model.l_ref_km = l_ref_km;
  auto at_ref = [&](const CalibrationPoint& p) {
    return std::abs(p.distance_km - l_ref_km) <= kDistanceEps;
  };
  for (const auto& p : points) {
    if (!(p.measured_q_db > 0.0)) throw CalibrationError("measured_q_db must be > 0");
  }

  PerModulation<std::optional<double>> slope;
  for (Modulation m : kModulations) {
    const std::string name(to_string(m));
    const CalibrationPoint* base = nullptr;
    const CalibrationPoint* guarded = nullptr;
    const CalibrationPoint* unguarded = nullptr;
    const CalibrationPoint* far = nullptr;
    for (const auto& p : points) {
      if (p.modulation != m) continue;
      const auto& n = p.neighbors;
      if (at_ref(p)) {
        if (clean(n)) {
          if (!base) base = &p;
        } else if (n.unguarded_native_count == 0) {
          if (!guarded) guarded = &p;
        } else if (!unguarded) {
          unguarded = &p;
        }
      } else if (clean(n) && !far) {
        far = &p;
      }
    }
    if (!base) throw CalibrationError("missing " + name + " zero-neighbour point at reference distance");
    if (!guarded) throw CalibrationError("missing " + name + " guarded-neighbour point at reference distance");
    if (!unguarded) throw CalibrationError("missing " + name + " unguarded-neighbour point at reference distance");

    model.q_ref_db[m] = base->measured_q_db;
    model.p_guard_db[m] =
        (base->measured_q_db - guarded->measured_q_db) / guarded->neighbors.guarded_native_count;
    model.p_unguard_db[m] = (base->measured_q_db - unguarded->measured_q_db -
                             model.p_guard_db[m] * unguarded->neighbors.guarded_native_count) /
                            unguarded->neighbors.unguarded_native_count;
    if (far) {
      slope[m] = (base->measured_q_db - far->measured_q_db) / (far->distance_km - l_ref_km);
    }
  }

  if (!slope.qpsk && !slope.bpsk) {
    throw CalibrationError("missing long-distance zero-neighbour point (needed for the distance slope)");
  }
  model.slope_db_per_km.qpsk = slope.qpsk.value_or(*slope.bpsk);
  model.slope_db_per_km.bpsk = slope.bpsk.value_or(*slope.qpsk);

  for (const auto& p : points) {
    const double residual = std::abs(predict(model, p) - p.measured_q_db);
    if (residual > kResidualTol) {
      throw CalibrationError("inconsistent calibration point (" + std::string(to_string(p.modulation)) +
                             " at " + std::to_string(p.distance_km) + " km): residual " +
                             std::to_string(residual) + " dB");
    }
  }
  auto violations = validate_model(model);
  if (!violations.empty()) {
    throw CalibrationError(violations.front().code + ": " + violations.front().message);
  }
  return model;
}

double neighbor_penalty(const QModel& model, const NeighborConfig& neighbors, Modulation m) {
  if (neighbors.in_dedicated_partition) return 0.0;
  return model.p_guard_db[m] * neighbors.guarded_native_count +
         model.p_unguard_db[m] * neighbors.unguarded_native_count;
}

QClass classify_q(double value_db, const Thresholds& thresholds) {
  if (value_db <= thresholds.hard_min_db) return QClass::Infeasible;
  if (value_db <= thresholds.design_min_db) return QClass::Marginal;
  return QClass::Ok;
}

QEstimate estimate_q(const QModel& model, const PathMetrics& metrics, Modulation m,
                     const NeighborConfig& neighbors, const Thresholds& thresholds) {
  const double value = model.q_ref_db[m] -
                       model.slope_db_per_km[m] * (metrics.distance_km - model.l_ref_km) -
                       neighbor_penalty(model, neighbors, m) -
                       model.roadm_penalty_db * metrics.roadm_count;
  return {value, classify_q(value, thresholds)};
}

double assess_native_impact(const NativeContext&) { return 0.0; }

}  // namespace awplan
