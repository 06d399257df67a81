#include "awplan/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "awplan/iofmt.hpp"

namespace awplan::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Options {
  bool json_errors = false;
  bool stamp = false;

  std::string calib_path;
  std::string topology_path;
  std::string demands_path;
  std::string grid_path;
  std::string requests_path;
  std::string out_path;
  std::string validate_path;
  std::string format;
  double l_ref_km = 345.0;

  double distance_km = 0.0;
  std::string modulation = "QPSK";
  std::string neighbors = "none";
  int roadm_count = 0;
  bool json_output = false;
  std::vector<double> distances{277, 345, 495, 813, 1131};

  PlannerPolicy policy;
};

NeighborConfig parse_neighbors(const std::string& spec) {
  if (spec == "none" || spec == "clean") return NeighborConfig::none();
  if (spec == "dedicated") return NeighborConfig::dedicated();
  int guarded = 0;
  int unguarded = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%d,%d%c", &guarded, &unguarded, &tail) != 2 || guarded < 0 ||
      unguarded < 0) {
    throw Error("--neighbors expects none, dedicated or GUARDED,UNGUARDED (got '" + spec + "')");
  }
  return {guarded, unguarded, false};
}

SpectrumGrid load_grid(const std::string& path) {
  if (path.empty()) return SpectrumGrid{};
  auto grid = deserialize<SpectrumGrid>(read_file(path));
  auto violations = validate_grid(grid);
  if (!violations.empty()) {
    throw SpectrumError(path + ": " + violations.front().code + ": " + violations.front().message);
  }
  return grid;
}

struct LoadedModel {
  QModel model;
  std::string sha256;
};

LoadedModel load_model(const Options& o) {
  auto points = deserialize<std::vector<CalibrationPoint>>(read_file(o.calib_path));
  return {calibrate(points, o.l_ref_km), sha256_hex(serialize(points))};
}

void stamp(Json& j, const Options& o) {
  if (!o.stamp) return;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["stamp"] = {{"generated_at", buf}, {"tool", "awplan"}};
}

void emit(const std::string& body, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + o.out_path + "'");
  file << body;
}

int cmd_calibrate(const Options& o, std::ostream& out) {
  auto loaded = load_model(o);
  Json j = to_json(loaded.model);
  j["calibration_sha256"] = loaded.sha256;
  stamp(j, o);
  emit(dump_canonical(j), o, out);
  return kOk;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  auto loaded = load_model(o);
  PathMetrics metrics;
  metrics.distance_km = o.distance_km;
  metrics.roadm_count = o.roadm_count;
  const auto q = estimate_q(loaded.model, metrics, parse_modulation(o.modulation),
                            parse_neighbors(o.neighbors), o.policy.thresholds);
  if (o.json_output) {
    emit(serialize(q), o, out);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f dB %s\n", q.value_db, std::string(to_string(q.klass)).c_str());
    emit(buf, o, out);
  }
  return q.klass == QClass::Infeasible ? kNoFeasibleOption : kOk;
}

int cmd_allocate(const Options& o, std::ostream& out) {
  const auto grid = load_grid(o.grid_path);
  auto requests = deserialize<std::vector<PlacementRequest>>(read_file(o.requests_path));
  auto result = first_fit_allocate(grid, requests);
  Json j = {{"assignments", to_json(result.assignments)}, {"grid", to_json(result.grid)}};
  stamp(j, o);
  emit(dump_canonical(j), o, out);
  return kOk;
}

int cmd_plan(const Options& o, std::ostream& out) {
  const auto topology = parse_topology(read_file(o.topology_path));
  const auto demands = deserialize<std::vector<Demand>>(read_file(o.demands_path));
  const auto grid = load_grid(o.grid_path);
  const auto loaded = load_model(o);
  validate_policy(o.policy);

  // Demands are independent; results keep input order.
  std::vector<std::future<PlanReport>> pending;
  for (const auto& d : demands) {
    pending.push_back(std::async(std::launch::async, [&, d] {
      auto r = plan_link(d, topology, grid, loaded.model, o.policy);
      r.calibration_sha256 = loaded.sha256;
      return r;
    }));
  }
  std::vector<PlanReport> reports;
  for (auto& f : pending) reports.push_back(f.get());

  bool all_feasible = true;
  for (const auto& r : reports) all_feasible = all_feasible && r.feasible;
  Json j = {{"reports", to_json(reports)}};
  stamp(j, o);
  emit(dump_canonical(j), o, out);
  return all_feasible ? kOk : kNoFeasibleOption;
}

int cmd_export_plot(const Options& o, std::ostream& out) {
  auto loaded = load_model(o);
  auto series = export_q_vs_distance(loaded.model, parse_modulation(o.modulation),
                                     parse_neighbors(o.neighbors), o.distances);
  std::string format = o.format;
  if (format.empty()) format = ends_with(o.out_path, ".json") ? "json" : "csv";
  emit(format == "json" ? serialize(series) : to_csv(series), o, out);
  return kOk;
}

// Guess what a file holds from its name, then from its shape.
std::string detect_kind(const std::string& path, const Json* doc) {
  for (const char* kind : {"topo", "demands", "calib", "model", "plan", "grid", "requests"}) {
    if (ends_with(path, std::string(".") + kind + ".json")) return kind;
  }
  if (ends_with(path, ".csv")) return "csv";
  if (doc == nullptr) return "";
  if (doc->is_object()) {
    if (doc->contains("reports")) return "plan";
    if (doc->contains("nodes") && doc->contains("spans")) return "topo";
    if (doc->contains("q_ref_db")) return "model";
    if (doc->contains("band") || doc->contains("natives")) return "grid";
  } else if (doc->is_array() && !doc->empty() && (*doc)[0].is_object()) {
    const auto& first = (*doc)[0];
    if (first.contains("measured_q_db")) return "calib";
    if (first.contains("required_capacity_gbps")) return "demands";
    if (first.contains("kind")) return "requests";
  }
  return "";
}

int cmd_validate(const Options& o, std::ostream& out) {
  const std::string body = read_file(o.validate_path);
  std::vector<Violation> violations;
  std::string kind = detect_kind(o.validate_path, nullptr);

  if (kind == "csv") {
    parse_csv(body);
  } else {
    const Json doc = parse_json(body);
    if (kind.empty()) kind = detect_kind(o.validate_path, &doc);
    if (kind == "topo") {
      violations = validate_topology(from_json<NetworkTopology>(doc));
    } else if (kind == "demands") {
      from_json<std::vector<Demand>>(doc);
    } else if (kind == "calib") {
      try {
        calibrate(from_json<std::vector<CalibrationPoint>>(doc), o.l_ref_km);
      } catch (const CalibrationError& e) {
        violations.push_back({"CALIBRATION", e.what()});
      }
    } else if (kind == "model") {
      violations = validate_model(from_json<QModel>(doc));
    } else if (kind == "grid") {
      violations = validate_grid(from_json<SpectrumGrid>(doc));
    } else if (kind == "requests") {
      from_json<std::vector<PlacementRequest>>(doc);
    } else if (kind == "plan") {
      const auto grid = load_grid(o.grid_path);
      const Json& reports = doc.is_object() && doc.contains("reports") ? doc["reports"] : doc;
      const auto parsed = Codec<std::vector<PlanReport>>::from(reports, "/reports");
      for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (auto v : validate_plan(parsed[i], grid, o.policy.thresholds)) {
          v.message = "report " + std::to_string(i) + ": " + v.message;
          violations.push_back(v);
        }
      }
    } else {
      throw ParseError(o.validate_path + ": cannot tell what kind of document this is");
    }
  }

  for (const auto& v : violations) out << v.code << ": " << v.message << "\n";
  if (violations.empty()) out << "ok: " << kind << "\n";
  return violations.empty() ? kOk : kNoFeasibleOption;
}

void report_error(std::ostream& err, const Options& o, bool color, std::string_view code,
                  const std::string& message) {
  if (o.json_errors) {
    err << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
    return;
  }
  if (color) {
    err << "\033[1;31merror:\033[0m " << message << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Alien-wavelength planning over a fixed-grid DWDM host network", "awplan"};
  app.require_subcommand(1);
  app.add_flag("--json-errors", o.json_errors, "Emit diagnostics as JSON on stderr");
  app.add_flag("--stamp", o.stamp, "Add generation metadata to JSON outputs");
  app.fallthrough();

  auto add_thresholds = [&](CLI::App* sub) {
    sub->add_option("--hard-min-db", o.policy.thresholds.hard_min_db, "Working Q floor (dB)");
    sub->add_option("--design-min-db", o.policy.thresholds.design_min_db, "Design Q target (dB)");
  };
  auto add_calib = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--calib", o.calib_path, "Calibration points (.calib.json)");
    if (required) opt->required();
    sub->add_option("--l-ref", o.l_ref_km, "Reference distance of the calibration (km)");
  };

  auto* calibrate_cmd = app.add_subcommand("calibrate", "Fit the Q model and export it");
  add_calib(calibrate_cmd, true);
  calibrate_cmd->add_option("--out", o.out_path);

  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate Q for one configuration");
  add_calib(estimate_cmd, true);
  estimate_cmd->add_option("--distance", o.distance_km, "Path length (km)")->required();
  estimate_cmd->add_option("--modulation", o.modulation, "bpsk or qpsk");
  estimate_cmd->add_option("--neighbors", o.neighbors, "none, dedicated or GUARDED,UNGUARDED");
  estimate_cmd->add_option("--roadm-count", o.roadm_count);
  estimate_cmd->add_flag("--json", o.json_output);
  estimate_cmd->add_option("--out", o.out_path);
  add_thresholds(estimate_cmd);

  auto* allocate_cmd = app.add_subcommand("allocate", "First-fit spectrum allocation");
  allocate_cmd->add_option("--grid", o.grid_path, "Spectrum state (.grid.json); empty band if omitted");
  allocate_cmd->add_option("--requests", o.requests_path, "Placement requests")->required();
  allocate_cmd->add_option("--out", o.out_path);

  auto* plan_cmd = app.add_subcommand("plan", "Plan alien super-channels for demands");
  plan_cmd->add_option("--topology", o.topology_path, "Host topology (.topo.json)")->required();
  plan_cmd->add_option("--demands", o.demands_path, "Demands (.demands.json)")->required();
  add_calib(plan_cmd, true);
  plan_cmd->add_option("--grid", o.grid_path, "Spectrum state (.grid.json); empty band if omitted");
  plan_cmd->add_option("--out", o.out_path);
  plan_cmd->add_option("--guard-band-slots", o.policy.guard_band_slots);
  plan_cmd->add_option("--qpsk-mixed-reach-limit-km", o.policy.qpsk_mixed_reach_limit_km);
  plan_cmd->add_option("--dedicated-edge-carrier-sacrifice", o.policy.dedicated_edge_carrier_sacrifice);
  plan_cmd->add_flag("--allow-mixed-pair-modulations", o.policy.allow_mixed_pair_modulations);
  add_thresholds(plan_cmd);

  auto* export_cmd = app.add_subcommand("export-plot", "Export a Q-vs-distance series");
  add_calib(export_cmd, true);
  export_cmd->add_option("--modulation", o.modulation);
  export_cmd->add_option("--neighbors", o.neighbors);
  export_cmd->add_option("--distances", o.distances, "Comma-separated distances (km)")->delimiter(',');
  export_cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  export_cmd->add_option("--out", o.out_path);

  auto* validate_cmd = app.add_subcommand("validate", "Check any awplan file against its invariants");
  validate_cmd->add_option("file", o.validate_path)->required();
  validate_cmd->add_option("--grid", o.grid_path, "Grid to check plan placements against");
  validate_cmd->add_option("--l-ref", o.l_ref_km);
  add_thresholds(validate_cmd);

  const bool color = &err == &std::cerr && ::isatty(STDERR_FILENO) && std::getenv("AWPLAN_NO_COLOR") == nullptr;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, o, color, "usage", e.what());
    return kInputError;
  }

  try {
    if (*calibrate_cmd) return cmd_calibrate(o, out);
    if (*estimate_cmd) return cmd_estimate(o, out);
    if (*allocate_cmd) return cmd_allocate(o, out);
    if (*plan_cmd) return cmd_plan(o, out);
    if (*export_cmd) return cmd_export_plot(o, out);
    if (*validate_cmd) return cmd_validate(o, out);
  } catch (const IoError& e) {
    report_error(err, o, color, "io", e.what());
    return kInputError;
  } catch (const ParseError& e) {
    report_error(err, o, color, "schema", e.what());
    return kInputError;
  } catch (const Error& e) {
    report_error(err, o, color, "input", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace awplan::cli
