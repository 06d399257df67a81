#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "awplan/adaptation.hpp"
#include "awplan/perfmodel.hpp"
#include "awplan/planner.hpp"
#include "awplan/spectrum.hpp"
#include "awplan/topology.hpp"

namespace awplan {

using Json = nlohmann::json;

/// Parses JSON text. Throws ParseError with the byte offset on bad syntax.
Json parse_json(std::string_view text);

/// Canonical text: sorted keys, two-space indent, reals with exactly four
/// decimals, trailing newline. The same value always yields the same bytes.
std::string dump_canonical(const Json& value);

/// Per-type JSON mapping. `from` reports schema problems as ParseError naming
/// the JSON path and the expected shape, e.g. "/spans/0/length_km: expected number".
template <typename T>
struct Codec;

#define AWPLAN_DECLARE_CODEC(T)                                 \
  template <>                                                   \
  struct Codec<T> {                                             \
    static Json to(const T& value);                             \
    static T from(const Json& j, const std::string& path = ""); \
  }

AWPLAN_DECLARE_CODEC(NetworkTopology);
AWPLAN_DECLARE_CODEC(PathMetrics);
AWPLAN_DECLARE_CODEC(NeighborConfig);
AWPLAN_DECLARE_CODEC(SpectrumGrid);
AWPLAN_DECLARE_CODEC(PlacementRequest);
AWPLAN_DECLARE_CODEC(Assignment);
AWPLAN_DECLARE_CODEC(CalibrationPoint);
AWPLAN_DECLARE_CODEC(QModel);
AWPLAN_DECLARE_CODEC(Thresholds);
AWPLAN_DECLARE_CODEC(QEstimate);
AWPLAN_DECLARE_CODEC(Demand);
AWPLAN_DECLARE_CODEC(PlanOption);
AWPLAN_DECLARE_CODEC(PlanReport);
AWPLAN_DECLARE_CODEC(PowerReading);
AWPLAN_DECLARE_CODEC(EqualizationResult);

#undef AWPLAN_DECLARE_CODEC

template <typename T>
struct Codec<std::vector<T>> {
  static Json to(const std::vector<T>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(Codec<T>::to(v));
    return arr;
  }
  static std::vector<T> from(const Json& j, const std::string& path = "") {
    if (!j.is_array()) throw ParseError((path.empty() ? "/" : path) + ": expected array");
    std::vector<T> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(Codec<T>::from(j[i], path + "/" + std::to_string(i)));
    }
    return out;
  }
};

template <typename T>
Json to_json(const T& value) {
  return Codec<T>::to(value);
}

template <typename T>
T from_json(const Json& j) {
  return Codec<T>::from(j);
}

template <typename T>
std::string serialize(const T& value) {
  return dump_canonical(to_json(value));
}

template <typename T>
T deserialize(std::string_view text) {
  return from_json<T>(parse_json(text));
}

/// serialize then parse.
template <typename T>
T round_trip(const T& value) {
  return deserialize<T>(serialize(value));
}

inline NetworkTopology topology_from_json(const Json& j) { return Codec<NetworkTopology>::from(j); }

/// Hex SHA-256 of `bytes`; used to stamp reports with the calibration they came from.
std::string sha256_hex(std::string_view bytes);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // ascending x
  std::string x_name = "x";
  std::string y_name = "y";

  bool operator==(const PlotSeries&) const = default;
};

template <>
struct Codec<PlotSeries> {
  static Json to(const PlotSeries& value);
  static PlotSeries from(const Json& j, const std::string& path = "");
};

/// Model Q over a list of distances, sorted by distance.
PlotSeries export_q_vs_distance(const QModel& model, Modulation m, const NeighborConfig& neighbors,
                                std::vector<double> distances);

/// Header "x_name,y_name" followed by one row per point at four decimals.
std::string to_csv(const PlotSeries& series);
PlotSeries parse_csv(std::string_view text);

}  // namespace awplan
