#include "awplan/iofmt.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace awplan {

namespace {

std::string where(const std::string& path) { return path.empty() ? "/" : path; }

void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(where(path) + ": expected object");
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  expect_object(j, path);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "/" + key + ": missing required field");
  return *it;
}

double number(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number()) throw ParseError(path + "/" + key + ": expected number");
  return v.get<double>();
}

int integer(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 1e9) return static_cast<int>(d);
  }
  throw ParseError(path + "/" + key + ": expected integer");
}

bool boolean(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_boolean()) throw ParseError(path + "/" + key + ": expected boolean");
  return v.get<bool>();
}

std::string text(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_string()) throw ParseError(path + "/" + key + ": expected string");
  return v.get<std::string>();
}

template <typename T>
T optional_field(const Json& j, const char* key, const std::string& path, T fallback,
                 T (*read)(const Json&, const char*, const std::string&)) {
  expect_object(j, path);
  return j.contains(key) ? read(j, key, path) : fallback;
}

// Enum parsers throw awplan::Error; rewrap them with the JSON location.
template <typename F>
auto enum_field(const Json& j, const char* key, const std::string& path, F parse) {
  const std::string raw = text(j, key, path);
  try {
    return parse(raw);
  } catch (const Error& e) {
    throw ParseError(path + "/" + key + ": " + e.what());
  }
}

std::string format_real(double v) {
  if (!std::isfinite(v)) throw Error("cannot serialize non-finite number");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

void write(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << inner << Json(it.key()).dump() << ": ";
        write(out, it.value(), indent + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",\n";
        out << inner;
        write(out, v[i], indent + 1);
      }
      out << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float:
      out << format_real(v.get<double>());
      return;
    default:
      out << v.dump();
  }
}

Json neighbors_json(const NeighborConfig& n) { return Codec<NeighborConfig>::to(n); }

}  // namespace

Json parse_json(std::string_view input) {
  try {
    return Json::parse(input.begin(), input.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump_canonical(const Json& value) {
  std::ostringstream out;
  write(out, value, 0);
  out << "\n";
  return out.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

// --- topology --------------------------------------------------------------

Json Codec<NetworkTopology>::to(const NetworkTopology& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes) {
    nodes.push_back({{"id", n.id}, {"name", n.name}, {"has_roadm", n.has_roadm}});
  }
  Json spans = Json::array();
  for (const auto& s : t.spans) {
    spans.push_back({{"from", s.from},
                     {"to", s.to},
                     {"length_km", s.length_km},
                     {"attenuation_db", s.attenuation_db},
                     {"amplifier", std::string(to_string(s.amplifier))},
                     {"dcm_present", s.dcm_present},
                     {"has_inline_ola", s.has_inline_ola}});
  }
  return {{"nodes", nodes}, {"spans", spans}};
}

NetworkTopology Codec<NetworkTopology>::from(const Json& j, const std::string& path) {
  NetworkTopology t;
  const Json& nodes = field(j, "nodes", path);
  if (!nodes.is_array()) throw ParseError(path + "/nodes: expected array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto p = path + "/nodes/" + std::to_string(i);
    t.nodes.push_back({text(nodes[i], "id", p), text(nodes[i], "name", p),
                       boolean(nodes[i], "has_roadm", p)});
  }
  const Json& spans = field(j, "spans", path);
  if (!spans.is_array()) throw ParseError(path + "/spans: expected array");
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const auto p = path + "/spans/" + std::to_string(i);
    const Json& s = spans[i];
    t.spans.push_back({text(s, "from", p), text(s, "to", p), number(s, "length_km", p),
                       number(s, "attenuation_db", p), enum_field(s, "amplifier", p, parse_amplifier),
                       boolean(s, "dcm_present", p), boolean(s, "has_inline_ola", p)});
  }
  return t;
}

Json Codec<PathMetrics>::to(const PathMetrics& m) {
  return {{"distance_km", m.distance_km},
          {"attenuation_db", m.attenuation_db},
          {"ola_count", m.ola_count},
          {"roadm_count", m.roadm_count},
          {"raman_span_count", m.raman_span_count}};
}

PathMetrics Codec<PathMetrics>::from(const Json& j, const std::string& path) {
  return {number(j, "distance_km", path), number(j, "attenuation_db", path),
          integer(j, "ola_count", path), integer(j, "roadm_count", path),
          integer(j, "raman_span_count", path)};
}

// --- spectrum --------------------------------------------------------------

Json Codec<NeighborConfig>::to(const NeighborConfig& n) {
  return {{"guarded_native_count", n.guarded_native_count},
          {"unguarded_native_count", n.unguarded_native_count},
          {"in_dedicated_partition", n.in_dedicated_partition}};
}

NeighborConfig Codec<NeighborConfig>::from(const Json& j, const std::string& path) {
  NeighborConfig n{integer(j, "guarded_native_count", path), integer(j, "unguarded_native_count", path),
                   boolean(j, "in_dedicated_partition", path)};
  if (n.guarded_native_count < 0 || n.unguarded_native_count < 0) {
    throw ParseError(where(path) + ": neighbour counts must be >= 0");
  }
  if (n.in_dedicated_partition && (n.guarded_native_count || n.unguarded_native_count)) {
    throw ParseError(where(path) + ": a dedicated-partition context has no native neighbours");
  }
  return n;
}

namespace {

Json superchannel_json(const SuperChannel& sc) {
  Json pairs = Json::array();
  for (const auto& p : sc.pairs) {
    pairs.push_back({{"index", p.index},
                     {"modulation", std::string(to_string(p.modulation))},
                     {"enabled", p.enabled}});
  }
  return {{"id", sc.id},
          {"start_slot", sc.start_slot},
          {"width_slots", sc.width_slots},
          {"active_carriers", sc.active_carriers},
          {"pairs", pairs}};
}

SuperChannel superchannel_from(const Json& j, const std::string& path, bool need_start) {
  SuperChannel sc;
  sc.id = text(j, "id", path);
  sc.start_slot = need_start ? integer(j, "start_slot", path) : 0;
  sc.width_slots = optional_field<int>(j, "width_slots", path, 8, integer);
  sc.active_carriers = integer(j, "active_carriers", path);
  const Json& pairs = field(j, "pairs", path);
  if (!pairs.is_array() || pairs.size() != kPairsPerSuperChannel) {
    throw ParseError(path + "/pairs: expected array of 5 carrier pairs");
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto p = path + "/pairs/" + std::to_string(i);
    sc.pairs[i] = {integer(pairs[i], "index", p), enum_field(pairs[i], "modulation", p, parse_modulation),
                   boolean(pairs[i], "enabled", p)};
  }
  return sc;
}

}  // namespace

Json Codec<SpectrumGrid>::to(const SpectrumGrid& g) {
  Json natives = Json::array();
  for (const auto& n : g.natives) {
    natives.push_back({{"id", n.id}, {"start_slot", n.start_slot}, {"bitrate_gbps", n.bitrate_gbps},
                       {"format", "IM-DD"}});
  }
  Json scs = Json::array();
  for (const auto& sc : g.superchannels) scs.push_back(superchannel_json(sc));
  Json parts = Json::array();
  for (const auto& p : g.partitions) {
    parts.push_back({{"start_slot", p.start_slot}, {"width_slots", p.width_slots}});
  }
  return {{"band",
           {{"slot_width_ghz", g.band.slot_width_ghz},
            {"slot_count", g.band.slot_count},
            {"native_channel_width_slots", g.band.native_channel_width_slots},
            {"superchannel_width_slots", g.band.superchannel_width_slots}}},
          {"natives", natives},
          {"superchannels", scs},
          {"partitions", parts}};
}

SpectrumGrid Codec<SpectrumGrid>::from(const Json& j, const std::string& path) {
  expect_object(j, path);
  SpectrumGrid g;
  if (j.contains("band")) {
    const Json& b = j["band"];
    const auto p = path + "/band";
    g.band.slot_width_ghz = optional_field<double>(b, "slot_width_ghz", p, 25.0, number);
    g.band.slot_count = optional_field<int>(b, "slot_count", p, 160, integer);
    g.band.native_channel_width_slots = optional_field<int>(b, "native_channel_width_slots", p, 2, integer);
    g.band.superchannel_width_slots = optional_field<int>(b, "superchannel_width_slots", p, 8, integer);
  }
  auto list = [&](const char* key) -> const Json& {
    static const Json kEmpty = Json::array();
    if (!j.contains(key)) return kEmpty;
    const Json& v = j[key];
    if (!v.is_array()) throw ParseError(path + "/" + key + ": expected array");
    return v;
  };
  const Json& natives = list("natives");
  for (std::size_t i = 0; i < natives.size(); ++i) {
    const auto p = path + "/natives/" + std::to_string(i);
    if (natives[i].contains("format") && natives[i]["format"] != "IM-DD") {
      throw ParseError(p + "/format: expected \"IM-DD\"");
    }
    g.natives.push_back({text(natives[i], "id", p), integer(natives[i], "start_slot", p),
                         optional_field<int>(natives[i], "bitrate_gbps", p, 10, integer)});
  }
  const Json& scs = list("superchannels");
  for (std::size_t i = 0; i < scs.size(); ++i) {
    g.superchannels.push_back(superchannel_from(scs[i], path + "/superchannels/" + std::to_string(i), true));
  }
  const Json& parts = list("partitions");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto p = path + "/partitions/" + std::to_string(i);
    g.partitions.push_back({integer(parts[i], "start_slot", p), integer(parts[i], "width_slots", p)});
  }
  return g;
}

Json Codec<PlacementRequest>::to(const PlacementRequest& r) {
  Json j = {{"partition_only", r.partition_only}, {"guard_band_slots", r.guard_band_slots}};
  if (r.kind == PlacementRequest::Kind::Native) {
    j["kind"] = "native";
    j["id"] = r.native.id;
    j["bitrate_gbps"] = r.native.bitrate_gbps;
  } else {
    j["kind"] = "superchannel";
    Json sc = superchannel_json(r.superchannel);
    sc.erase("start_slot");
    j.update(sc);
  }
  return j;
}

PlacementRequest Codec<PlacementRequest>::from(const Json& j, const std::string& path) {
  const std::string kind = text(j, "kind", path);
  PlacementRequest r;
  if (kind == "native") {
    r.kind = PlacementRequest::Kind::Native;
    r.native.id = text(j, "id", path);
    r.native.bitrate_gbps = optional_field<int>(j, "bitrate_gbps", path, 10, integer);
  } else if (kind == "superchannel") {
    r.kind = PlacementRequest::Kind::SuperChannel;
    if (j.contains("pairs")) {
      r.superchannel = superchannel_from(j, path, false);
    } else {
      // Shorthand: uniform modulation.
      const auto m = optional_field<std::string>(j, "modulation", path, "QPSK", text);
      r.superchannel = SuperChannel::uniform(
          text(j, "id", path), 0, parse_modulation(m),
          optional_field<int>(j, "active_carriers", path, kCarriersPerSuperChannel, integer),
          optional_field<int>(j, "width_slots", path, 8, integer));
    }
  } else {
    throw ParseError(path + "/kind: expected \"native\" or \"superchannel\"");
  }
  r.partition_only = optional_field<bool>(j, "partition_only", path, false, boolean);
  r.guard_band_slots = optional_field<int>(j, "guard_band_slots", path, 0, integer);
  return r;
}

Json Codec<Assignment>::to(const Assignment& a) {
  return {{"id", a.id}, {"placed", a.placed}, {"start_slot", a.start_slot}, {"reason", a.reason}};
}

Assignment Codec<Assignment>::from(const Json& j, const std::string& path) {
  return {text(j, "id", path), boolean(j, "placed", path), integer(j, "start_slot", path),
          text(j, "reason", path)};
}

// --- perfmodel -------------------------------------------------------------

Json Codec<CalibrationPoint>::to(const CalibrationPoint& p) {
  return {{"distance_km", p.distance_km},
          {"modulation", std::string(to_string(p.modulation))},
          {"neighbors", neighbors_json(p.neighbors)},
          {"measured_q_db", p.measured_q_db}};
}

CalibrationPoint Codec<CalibrationPoint>::from(const Json& j, const std::string& path) {
  CalibrationPoint p{number(j, "distance_km", path), enum_field(j, "modulation", path, parse_modulation),
                     Codec<NeighborConfig>::from(field(j, "neighbors", path), path + "/neighbors"),
                     number(j, "measured_q_db", path)};
  if (!(p.measured_q_db > 0.0)) throw ParseError(path + "/measured_q_db: expected number > 0");
  return p;
}

namespace {

Json per_mod(const PerModulation<double>& v) { return {{"BPSK", v.bpsk}, {"QPSK", v.qpsk}}; }

PerModulation<double> per_mod_from(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  const auto p = path + "/" + key;
  return {number(v, "BPSK", p), number(v, "QPSK", p)};
}

}  // namespace

Json Codec<QModel>::to(const QModel& m) {
  return {{"model", "empirical linear-dB Q model"},
          {"l_ref_km", m.l_ref_km},
          {"q_ref_db", per_mod(m.q_ref_db)},
          {"slope_db_per_km", per_mod(m.slope_db_per_km)},
          {"p_guard_db", per_mod(m.p_guard_db)},
          {"p_unguard_db", per_mod(m.p_unguard_db)},
          {"roadm_penalty_db", m.roadm_penalty_db}};
}

QModel Codec<QModel>::from(const Json& j, const std::string& path) {
  QModel m;
  m.l_ref_km = number(j, "l_ref_km", path);
  m.q_ref_db = per_mod_from(j, "q_ref_db", path);
  m.slope_db_per_km = per_mod_from(j, "slope_db_per_km", path);
  m.p_guard_db = per_mod_from(j, "p_guard_db", path);
  m.p_unguard_db = per_mod_from(j, "p_unguard_db", path);
  m.roadm_penalty_db = optional_field<double>(j, "roadm_penalty_db", path, 0.0, number);
  return m;
}

Json Codec<Thresholds>::to(const Thresholds& t) {
  return {{"hard_min_db", t.hard_min_db}, {"design_min_db", t.design_min_db}};
}

Thresholds Codec<Thresholds>::from(const Json& j, const std::string& path) {
  return {number(j, "hard_min_db", path), number(j, "design_min_db", path)};
}

Json Codec<QEstimate>::to(const QEstimate& q) {
  return {{"value_db", q.value_db}, {"class", std::string(to_string(q.klass))}};
}

QEstimate Codec<QEstimate>::from(const Json& j, const std::string& path) {
  return {number(j, "value_db", path), enum_field(j, "class", path, parse_qclass)};
}

// --- planner ---------------------------------------------------------------

Json Codec<Demand>::to(const Demand& d) {
  return {{"path", d.path}, {"required_capacity_gbps", d.required_capacity_gbps}};
}

Demand Codec<Demand>::from(const Json& j, const std::string& path) {
  const Json& p = field(j, "path", path);
  if (!p.is_array() || p.empty()) throw ParseError(path + "/path: expected non-empty array of node ids");
  Demand d;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_string()) throw ParseError(path + "/path/" + std::to_string(i) + ": expected string");
    d.path.push_back(p[i].get<std::string>());
  }
  d.required_capacity_gbps = number(j, "required_capacity_gbps", path);
  if (!(d.required_capacity_gbps > 0.0)) {
    throw ParseError(path + "/required_capacity_gbps: expected number > 0");
  }
  return d;
}

Json Codec<PlanOption>::to(const PlanOption& o) {
  Json mods = Json::array();
  for (auto m : o.pair_modulations) mods.push_back(std::string(to_string(m)));
  return {{"strategy", std::string(to_string(o.strategy))},
          {"pair_modulations", mods},
          {"active_carriers", o.active_carriers},
          {"capacity_gbps", o.capacity_gbps},
          {"q", Codec<QEstimate>::to(o.q)},
          {"feasible", o.feasible},
          {"neighbors", neighbors_json(o.neighbors)},
          {"start_slot", o.start_slot},
          {"carve_partition", o.carve_partition},
          {"note", o.note},
          {"warning", o.warning}};
}

PlanOption Codec<PlanOption>::from(const Json& j, const std::string& path) {
  PlanOption o;
  o.strategy = enum_field(j, "strategy", path, parse_strategy);
  const Json& mods = field(j, "pair_modulations", path);
  if (!mods.is_array() || mods.size() != kPairsPerSuperChannel) {
    throw ParseError(path + "/pair_modulations: expected array of 5 modulations");
  }
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (!mods[i].is_string()) {
      throw ParseError(path + "/pair_modulations/" + std::to_string(i) + ": expected string");
    }
    try {
      o.pair_modulations[i] = parse_modulation(mods[i].get<std::string>());
    } catch (const Error& e) {
      throw ParseError(path + "/pair_modulations/" + std::to_string(i) + ": " + e.what());
    }
  }
  o.active_carriers = integer(j, "active_carriers", path);
  o.capacity_gbps = number(j, "capacity_gbps", path);
  o.q = Codec<QEstimate>::from(field(j, "q", path), path + "/q");
  o.feasible = boolean(j, "feasible", path);
  o.neighbors = Codec<NeighborConfig>::from(field(j, "neighbors", path), path + "/neighbors");
  o.start_slot = integer(j, "start_slot", path);
  o.carve_partition = boolean(j, "carve_partition", path);
  o.note = text(j, "note", path);
  o.warning = text(j, "warning", path);
  return o;
}

Json Codec<PlanReport>::to(const PlanReport& r) {
  return {{"demand", Codec<Demand>::to(r.demand)},
          {"metrics", Codec<PathMetrics>::to(r.metrics)},
          {"chosen", Codec<PlanOption>::to(r.chosen)},
          {"alternatives", Codec<std::vector<PlanOption>>::to(r.alternatives)},
          {"warnings", r.warnings},
          {"rationale", r.rationale},
          {"native_impact_db", r.native_impact_db},
          {"feasible", r.feasible},
          {"provenance",
           {{"model", "empirical linear-dB Q model"}, {"calibration_sha256", r.calibration_sha256}}}};
}

PlanReport Codec<PlanReport>::from(const Json& j, const std::string& path) {
  PlanReport r;
  r.demand = Codec<Demand>::from(field(j, "demand", path), path + "/demand");
  r.metrics = Codec<PathMetrics>::from(field(j, "metrics", path), path + "/metrics");
  r.chosen = Codec<PlanOption>::from(field(j, "chosen", path), path + "/chosen");
  r.alternatives = Codec<std::vector<PlanOption>>::from(field(j, "alternatives", path), path + "/alternatives");
  const Json& w = field(j, "warnings", path);
  if (!w.is_array()) throw ParseError(path + "/warnings: expected array");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_string()) throw ParseError(path + "/warnings/" + std::to_string(i) + ": expected string");
    r.warnings.push_back(w[i].get<std::string>());
  }
  r.rationale = text(j, "rationale", path);
  r.native_impact_db = number(j, "native_impact_db", path);
  r.feasible = boolean(j, "feasible", path);
  r.calibration_sha256 = text(field(j, "provenance", path), "calibration_sha256", path + "/provenance");
  return r;
}

// --- adaptation ------------------------------------------------------------

Json Codec<PowerReading>::to(const PowerReading& p) {
  return {{"channel_ref", p.channel_ref}, {"power_dbm", p.power_dbm}};
}

PowerReading Codec<PowerReading>::from(const Json& j, const std::string& path) {
  return {text(j, "channel_ref", path), number(j, "power_dbm", path)};
}

Json Codec<EqualizationResult>::to(const EqualizationResult& r) {
  Json settings = Json::array();
  for (const auto& s : r.settings) {
    settings.push_back({{"channel_ref", s.channel_ref}, {"attenuation_db", s.attenuation_db}});
  }
  return {{"settings", settings}, {"max_residual_db", r.max_residual_db}, {"clipped_channels", r.clipped_channels}};
}

EqualizationResult Codec<EqualizationResult>::from(const Json& j, const std::string& path) {
  EqualizationResult r;
  const Json& settings = field(j, "settings", path);
  if (!settings.is_array()) throw ParseError(path + "/settings: expected array");
  for (std::size_t i = 0; i < settings.size(); ++i) {
    const auto p = path + "/settings/" + std::to_string(i);
    r.settings.push_back({text(settings[i], "channel_ref", p), number(settings[i], "attenuation_db", p)});
  }
  r.max_residual_db = number(j, "max_residual_db", path);
  const Json& clipped = field(j, "clipped_channels", path);
  if (!clipped.is_array()) throw ParseError(path + "/clipped_channels: expected array");
  for (const auto& c : clipped) {
    if (!c.is_string()) throw ParseError(path + "/clipped_channels: expected array of strings");
    r.clipped_channels.push_back(c.get<std::string>());
  }
  return r;
}

// --- plot series -----------------------------------------------------------

Json Codec<PlotSeries>::to(const PlotSeries& s) {
  Json points = Json::array();
  for (const auto& [x, y] : s.points) points.push_back(Json::array({x, y}));
  return {{"label", s.label}, {"x_name", s.x_name}, {"y_name", s.y_name}, {"points", points}};
}

PlotSeries Codec<PlotSeries>::from(const Json& j, const std::string& path) {
  PlotSeries s;
  s.label = text(j, "label", path);
  s.x_name = text(j, "x_name", path);
  s.y_name = text(j, "y_name", path);
  const Json& points = field(j, "points", path);
  if (!points.is_array()) throw ParseError(path + "/points: expected array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Json& p = points[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ParseError(path + "/points/" + std::to_string(i) + ": expected [x, y] number pair");
    }
    s.points.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return s;
}

PlotSeries export_q_vs_distance(const QModel& model, Modulation m, const NeighborConfig& neighbors,
                                std::vector<double> distances) {
  if (distances.empty()) throw Error("no distances to export");
  for (double d : distances) {
    if (!std::isfinite(d)) throw Error("distances must be finite");
  }
  std::sort(distances.begin(), distances.end());

  PlotSeries s;
  s.label = std::string(to_string(m)) +
            (neighbors.in_dedicated_partition
                 ? " dedicated"
                 : " g" + std::to_string(neighbors.guarded_native_count) + " u" +
                       std::to_string(neighbors.unguarded_native_count));
  s.x_name = "distance_km";
  s.y_name = "q_db";
  for (double d : distances) {
    PathMetrics metrics;
    metrics.distance_km = d;
    s.points.emplace_back(d, estimate_q(model, metrics, m, neighbors).value_db);
  }
  return s;
}

std::string to_csv(const PlotSeries& series) {
  std::string out = series.x_name + "," + series.y_name + "\n";
  for (const auto& [x, y] : series.points) out += format_real(x) + "," + format_real(y) + "\n";
  return out;
}

PlotSeries parse_csv(std::string_view input) {
  std::istringstream in{std::string(input)};
  std::string line;
  PlotSeries s;
  if (!std::getline(in, line)) throw ParseError("csv: missing header");
  const auto comma = line.find(',');
  if (comma == std::string::npos) throw ParseError("csv line 1: expected header \"x_name,y_name\"");
  s.x_name = line.substr(0, comma);
  s.y_name = line.substr(comma + 1);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double x = 0.0;
    double y = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf%c", &x, &y, &tail) != 2) {
      throw ParseError("csv line " + std::to_string(lineno) + ": expected two numbers");
    }
    s.points.emplace_back(x, y);
  }
  return s;
}

}  // namespace awplan
