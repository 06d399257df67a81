#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "awplan/adaptation.hpp"
#include "awplan/iofmt.hpp"
#include "awplan/planner.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using awplan::Json;

// Documents cross the boundary as plain Python containers.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return awplan::parse_json(text);
}

template <typename T>
T load(const py::handle& obj) {
  return awplan::from_json<T>(from_py(obj));
}

template <typename T>
py::object dump(const T& value) {
  return to_py(awplan::to_json(value));
}

py::list violations(const std::vector<awplan::Violation>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(py::make_tuple(v.code, v.message));
  return out;
}

awplan::PlannerPolicy make_policy(int guard_band_slots, double qpsk_mixed_reach_limit_km, int sacrifice,
                                  bool allow_mixed_pair_modulations, double hard_min_db, double design_min_db) {
  awplan::PlannerPolicy p;
  p.guard_band_slots = guard_band_slots;
  p.qpsk_mixed_reach_limit_km = qpsk_mixed_reach_limit_km;
  p.dedicated_edge_carrier_sacrifice = sacrifice;
  p.allow_mixed_pair_modulations = allow_mixed_pair_modulations;
  p.thresholds = {hard_min_db, design_min_db};
  return p;
}

awplan::NeighborConfig neighbors(int guarded, int unguarded, bool dedicated) {
  return dedicated ? awplan::NeighborConfig::dedicated() : awplan::NeighborConfig{guarded, unguarded, false};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Alien-wavelength planning core";

  static py::exception<awplan::Error> error(m, "Error");
  static py::exception<awplan::ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const awplan::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const awplan::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "parse_topology", [](const std::string& text) { return dump(awplan::parse_topology(text)); }, "text"_a);
  m.def(
      "validate_topology",
      [](const py::object& topo) { return violations(awplan::validate_topology(load<awplan::NetworkTopology>(topo))); },
      "topology"_a);
  m.def(
      "aggregate_path",
      [](const py::object& topo, const std::vector<std::string>& path) {
        return dump(awplan::aggregate_path(load<awplan::NetworkTopology>(topo), path));
      },
      "topology"_a, "path"_a);

  m.def(
      "validate_grid", [](const py::object& grid) { return violations(awplan::validate_grid(load<awplan::SpectrumGrid>(grid))); },
      "grid"_a);
  m.def(
      "first_fit_allocate",
      [](const py::object& grid, const py::object& requests) {
        const auto r = awplan::first_fit_allocate(load<awplan::SpectrumGrid>(grid),
                                                  load<std::vector<awplan::PlacementRequest>>(requests));
        return py::dict("grid"_a = dump(r.grid), "assignments"_a = dump(r.assignments));
      },
      "grid"_a, "requests"_a);
  m.def(
      "carve_dedicated_partition",
      [](const py::object& grid, int start, int width) {
        return dump(awplan::carve_dedicated_partition(load<awplan::SpectrumGrid>(grid), start, width));
      },
      "grid"_a, "start_slot"_a, "width_slots"_a);
  m.def(
      "neighbor_context",
      [](const py::object& grid, const std::string& sc_id, int guard) {
        return dump(awplan::neighbor_context(load<awplan::SpectrumGrid>(grid), sc_id, guard));
      },
      "grid"_a, "sc_id"_a, "guard_band_slots"_a = 2);

  m.def(
      "calibrate",
      [](const py::object& points, double l_ref) {
        return dump(awplan::calibrate(load<std::vector<awplan::CalibrationPoint>>(points), l_ref));
      },
      "points"_a, "l_ref_km"_a = 345.0);
  m.def(
      "estimate_q",
      [](const py::object& model, double distance_km, const std::string& modulation, int guarded, int unguarded,
         bool dedicated, int roadm_count, double hard_min_db, double design_min_db) {
        awplan::PathMetrics metrics;
        metrics.distance_km = distance_km;
        metrics.roadm_count = roadm_count;
        const auto q = awplan::estimate_q(load<awplan::QModel>(model), metrics, awplan::parse_modulation(modulation),
                                          neighbors(guarded, unguarded, dedicated), {hard_min_db, design_min_db});
        return py::make_tuple(q.value_db, std::string(awplan::to_string(q.klass)));
      },
      "model"_a, "distance_km"_a, "modulation"_a = "QPSK", "guarded"_a = 0, "unguarded"_a = 0, "dedicated"_a = false,
      "roadm_count"_a = 0, "hard_min_db"_a = 6.5, "design_min_db"_a = 8.5);
  m.def(
      "classify_q",
      [](double q, double hard_min_db, double design_min_db) {
        return std::string(awplan::to_string(awplan::classify_q(q, {hard_min_db, design_min_db})));
      },
      "q_db"_a, "hard_min_db"_a = 6.5, "design_min_db"_a = 8.5);

  m.def(
      "superchannel_capacity",
      [](const std::vector<std::string>& pairs, int active) {
        if (pairs.size() != awplan::kPairsPerSuperChannel) throw awplan::PlanningError("expected 5 pair modulations");
        awplan::PairModulations mods;
        for (std::size_t i = 0; i < pairs.size(); ++i) mods[i] = awplan::parse_modulation(pairs[i]);
        return awplan::superchannel_capacity(mods, active);
      },
      "pair_modulations"_a, "active_carriers"_a);
  m.def(
      "plan_link",
      [](const py::object& demand, const py::object& topo, const py::object& grid, const py::object& model,
         int guard, double reach, int sacrifice, bool mixed_pairs, double hard_min_db, double design_min_db) {
        const auto report = awplan::plan_link(
            load<awplan::Demand>(demand), load<awplan::NetworkTopology>(topo),
            grid.is_none() ? awplan::SpectrumGrid{} : load<awplan::SpectrumGrid>(grid), load<awplan::QModel>(model),
            make_policy(guard, reach, sacrifice, mixed_pairs, hard_min_db, design_min_db));
        return dump(report);
      },
      "demand"_a, "topology"_a, "grid"_a, "model"_a, "guard_band_slots"_a = 2, "qpsk_mixed_reach_limit_km"_a = 1000.0,
      "dedicated_edge_carrier_sacrifice"_a = 1, "allow_mixed_pair_modulations"_a = false, "hard_min_db"_a = 6.5,
      "design_min_db"_a = 8.5);

  m.def(
      "compute_voa_settings",
      [](const py::object& readings, double target) {
        return dump(awplan::compute_voa_settings(load<std::vector<awplan::PowerReading>>(readings), target));
      },
      "readings"_a, "target_dbm"_a);

  m.def(
      "export_q_vs_distance",
      [](const py::object& model, const std::string& modulation, const std::vector<double>& distances, int guarded,
         int unguarded, bool dedicated) {
        return dump(awplan::export_q_vs_distance(load<awplan::QModel>(model), awplan::parse_modulation(modulation),
                                                 neighbors(guarded, unguarded, dedicated), distances));
      },
      "model"_a, "modulation"_a, "distances"_a, "guarded"_a = 0, "unguarded"_a = 0, "dedicated"_a = false);
  m.def(
      "to_csv", [](const py::object& series) { return awplan::to_csv(load<awplan::PlotSeries>(series)); }, "series"_a);

  m.def(
      "dump_canonical", [](const py::object& doc) { return awplan::dump_canonical(from_py(doc)); }, "document"_a);
  m.def(
      "sha256_hex", [](const py::bytes& data) { return awplan::sha256_hex(std::string(data)); }, "data"_a);
}
