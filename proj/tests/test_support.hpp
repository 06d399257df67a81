#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "awplan/iofmt.hpp"

namespace awplan::testing {

inline std::string data_path(const std::string& name) { return std::string(AWPLAN_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline NetworkTopology garr_topology() { return parse_topology(read_text(data_path("garr.topo.json"))); }

inline SpectrumGrid garr_grid() { return deserialize<SpectrumGrid>(read_text(data_path("garr.grid.json"))); }

inline std::vector<CalibrationPoint> trial_points() {
  return deserialize<std::vector<CalibrationPoint>>(read_text(data_path("trial.calib.json")));
}

inline QModel trial_model() { return calibrate(trial_points(), 345.0); }

inline Demand fixture_demand(const std::string& name) {
  return deserialize<std::vector<Demand>>(read_text(data_path(name + ".demands.json"))).at(0);
}

}  // namespace awplan::testing
