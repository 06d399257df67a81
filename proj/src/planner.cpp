#include "awplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace awplan {

namespace {

constexpr double kQpskCarrierGbps = 50.0;
constexpr double kBpskCarrierGbps = 25.0;

std::string fixed(double v, int places = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

bool uniform(const PairModulations& pairs) {
  return std::all_of(pairs.begin(), pairs.end(), [&](Modulation m) { return m == pairs[0]; });
}

PairModulations all_of(Modulation m) {
  PairModulations p;
  p.fill(m);
  return p;
}

std::string label(const PlanOption& o) {
  std::string mods;
  if (uniform(o.pair_modulations)) {
    mods = std::string(to_string(o.pair_modulations[0]));
  } else {
    for (std::size_t i = 0; i < o.pair_modulations.size(); ++i) {
      mods += (i ? "/" : "") + std::string(to_string(o.pair_modulations[i]));
    }
  }
  return std::string(to_string(o.strategy)) + " " + mods + " x" + std::to_string(o.active_carriers);
}

int partition_width(const BandConfig& band) {
  return band.superchannel_width_slots + band.superchannel_width_slots % 2;
}

}  // namespace

std::string_view to_string(Strategy s) {
  return s == Strategy::MixedSpectrum ? "MixedSpectrum" : "DedicatedPartition";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "MixedSpectrum") return Strategy::MixedSpectrum;
  if (text == "DedicatedPartition") return Strategy::DedicatedPartition;
  throw Error("unknown strategy '" + std::string(text) + "'");
}

void validate_policy(const PlannerPolicy& policy) {
  if (policy.guard_band_slots < 0) throw PlanningError("guard_band_slots must be >= 0");
  if (!(policy.qpsk_mixed_reach_limit_km >= 0.0)) {
    throw PlanningError("qpsk_mixed_reach_limit_km must be >= 0");
  }
  if (policy.dedicated_edge_carrier_sacrifice < 0 || policy.dedicated_edge_carrier_sacrifice > 1) {
    throw PlanningError("dedicated_edge_carrier_sacrifice must be 0 or 1");
  }
  if (!(policy.thresholds.hard_min_db < policy.thresholds.design_min_db)) {
    throw PlanningError("hard_min_db must be below design_min_db");
  }
}

double superchannel_capacity(const PairModulations& pair_modulations, int active_carriers) {
  if (active_carriers < 0 || active_carriers > kCarriersPerSuperChannel) {
    throw PlanningError("active_carriers must be within 0.." + std::to_string(kCarriersPerSuperChannel));
  }
  double total = 0.0;
  for (int c = 0; c < active_carriers; ++c) {
    total += pair_modulations[c / 2] == Modulation::QPSK ? kQpskCarrierGbps : kBpskCarrierGbps;
  }
  return total;
}

GridContext grid_context_for(const SpectrumGrid& grid, const PlannerPolicy& policy) {
  GridContext ctx;
  const auto& band = grid.band;
  const std::string probe_id = "__probe__";
  auto probe = SuperChannel::uniform(probe_id, 0, Modulation::QPSK);
  probe.width_slots = band.superchannel_width_slots;

  auto outside_partitions = [&](int s) {
    return std::none_of(grid.partitions.begin(), grid.partitions.end(), [&](const auto& p) {
      return p.overlaps(s, s + probe.width_slots);
    });
  };
  for (int guard : {policy.guard_band_slots, 0}) {
    auto req = PlacementRequest::for_superchannel(probe, guard);
    for (int s = 0; s < band.slot_count && !ctx.mixed_start_slot; ++s) {
      if (outside_partitions(s) && !placement_blocker(grid, req, s)) ctx.mixed_start_slot = s;
    }
    if (ctx.mixed_start_slot) break;
  }
  if (ctx.mixed_start_slot) {
    auto placed = probe;
    placed.start_slot = *ctx.mixed_start_slot;
    ctx.mixed_neighbors =
        neighbor_context(place_superchannel(grid, placed), probe_id, policy.guard_band_slots);
  }

  auto dedicated = PlacementRequest::for_superchannel(probe, 0, true);
  for (int s = 0; s < band.slot_count && !ctx.dedicated_start_slot; ++s) {
    if (!placement_blocker(grid, dedicated, s)) ctx.dedicated_start_slot = s;
  }
  if (!ctx.dedicated_start_slot) {
    const int width = partition_width(band);
    for (int s = 0; s + width <= band.slot_count; s += 2) {
      try {
        auto carved = carve_dedicated_partition(grid, s, width);
        if (placement_blocker(carved, dedicated, s)) continue;
      } catch (const SpectrumError&) {
        continue;
      }
      ctx.dedicated_start_slot = s;
      ctx.dedicated_needs_carving = true;
      break;
    }
  }
  return ctx;
}

std::vector<PlanOption> enumerate_options(const Demand& demand, const PathMetrics& metrics,
                                          const GridContext& context, const QModel& model,
                                          const PlannerPolicy& policy) {
  (void)demand;
  std::vector<PlanOption> out;

  auto make = [&](Strategy strategy, const PairModulations& pairs, int active) {
    PlanOption o;
    o.strategy = strategy;
    o.pair_modulations = pairs;
    o.active_carriers = active;
    o.capacity_gbps = superchannel_capacity(pairs, active);
    const bool mixed = strategy == Strategy::MixedSpectrum;
    o.neighbors = mixed ? context.mixed_neighbors : NeighborConfig::dedicated();
    const auto slot = mixed ? context.mixed_start_slot : context.dedicated_start_slot;
    o.start_slot = slot.value_or(-1);
    o.carve_partition = !mixed && context.dedicated_needs_carving;

    // The weakest lit pair limits the super-channel.
    bool has_qpsk = false;
    std::optional<double> worst;
    for (int c = 0; c < active; c += 2) {
      const Modulation m = pairs[c / 2];
      has_qpsk |= m == Modulation::QPSK;
      double q = estimate_q(model, metrics, m, o.neighbors, policy.thresholds).value_db;
      if (uniform(pairs)) {
        for (const auto& ov : policy.q_overrides) {
          if (ov.strategy == strategy && ov.modulation == m) q = ov.q_db;
        }
      }
      worst = worst ? std::min(*worst, q) : q;
    }
    const double q = worst.value_or(0.0);
    o.q = {q, classify_q(q, policy.thresholds)};

    if (o.q.klass == QClass::Infeasible) {
      o.note = "Q " + fixed(q) + " dB is not above the " + fixed(policy.thresholds.hard_min_db) +
               " dB working threshold";
    } else if (!slot) {
      o.note = mixed ? "no free spectrum window for a mixed placement"
                     : "no dedicated partition available or carvable";
    } else if (mixed && has_qpsk && metrics.distance_km > policy.qpsk_mixed_reach_limit_km) {
      o.note = "distance " + fixed(metrics.distance_km, 0) + " km exceeds the " +
               fixed(policy.qpsk_mixed_reach_limit_km, 0) + " km mixed-spectrum QPSK reach limit";
    }
    o.feasible = o.note.empty();
    if (o.q.klass == QClass::Marginal) {
      o.warning = label(o) + ": Q " + fixed(q) + " dB is below the " +
                  fixed(policy.thresholds.design_min_db) + " dB design threshold";
    }
    out.push_back(o);
  };

  make(Strategy::MixedSpectrum, all_of(Modulation::BPSK), kCarriersPerSuperChannel);
  make(Strategy::MixedSpectrum, all_of(Modulation::QPSK), kCarriersPerSuperChannel);
  if (policy.allow_mixed_pair_modulations) {
    for (int qpsk_pairs = 1; qpsk_pairs < kPairsPerSuperChannel; ++qpsk_pairs) {
      PairModulations pairs = all_of(Modulation::BPSK);
      std::fill_n(pairs.begin(), qpsk_pairs, Modulation::QPSK);
      make(Strategy::MixedSpectrum, pairs, kCarriersPerSuperChannel);
    }
  }
  if (context.dedicated_start_slot) {
    make(Strategy::DedicatedPartition, all_of(Modulation::QPSK),
         kCarriersPerSuperChannel - policy.dedicated_edge_carrier_sacrifice);
  }
  return out;
}

PlanReport plan_link(const Demand& demand, const NetworkTopology& topology, const SpectrumGrid& grid,
                     const QModel& model, const PlannerPolicy& policy) {
  if (demand.path.empty()) throw PlanningError("demand path is empty");
  if (!(demand.required_capacity_gbps > 0.0)) {
    throw PlanningError("required_capacity_gbps must be > 0");
  }
  validate_policy(policy);

  PlanReport report;
  report.demand = demand;
  report.metrics = aggregate_path(topology, demand.path);
  auto options = enumerate_options(demand, report.metrics, grid_context_for(grid, policy), model, policy);

  auto better_feasible = [](const PlanOption& a, const PlanOption& b) {
    if (a.capacity_gbps != b.capacity_gbps) return a.capacity_gbps > b.capacity_gbps;
    if (a.q.value_db != b.q.value_db) return a.q.value_db > b.q.value_db;
    return a.strategy == Strategy::MixedSpectrum && b.strategy != Strategy::MixedSpectrum;
  };
  auto better_infeasible = [](const PlanOption& a, const PlanOption& b) {
    if (a.q.value_db != b.q.value_db) return a.q.value_db > b.q.value_db;
    return a.capacity_gbps > b.capacity_gbps;
  };
  std::size_t best = options.size();
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (!options[i].feasible) continue;
    if (best == options.size() || better_feasible(options[i], options[best])) best = i;
  }
  report.feasible = best != options.size();
  if (!report.feasible) {
    best = 0;
    for (std::size_t i = 1; i < options.size(); ++i) {
      if (better_infeasible(options[i], options[best])) best = i;
    }
  }
  report.chosen = options[best];
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (i != best) report.alternatives.push_back(options[i]);
  }

  const auto& c = report.chosen;
  if (!c.warning.empty()) report.warnings.push_back(c.warning);
  if (!report.feasible) {
    const double shortfall = policy.thresholds.hard_min_db - c.q.value_db;
    report.warnings.push_back("no feasible option: best option " + label(c) + " reaches Q " +
                              fixed(c.q.value_db) + " dB" +
                              (shortfall >= 0.0 ? ", short of the " + fixed(policy.thresholds.hard_min_db) +
                                                      " dB working threshold by " + fixed(shortfall) + " dB"
                                                : " but " + c.note));
  } else if (demand.required_capacity_gbps > c.capacity_gbps) {
    report.warnings.push_back("demand of " + fixed(demand.required_capacity_gbps, 0) +
                              " Gbps exceeds the best feasible capacity of " +
                              fixed(c.capacity_gbps, 0) + " Gbps");
  }

  std::string rationale = (report.feasible ? "Chose " : "No feasible option; closest is ") + label(c) +
                          " (" + fixed(c.capacity_gbps, 0) + " Gbps, Q " + fixed(c.q.value_db) +
                          " dB " + std::string(to_string(c.q.klass)) + ").";
  for (const auto& alt : report.alternatives) {
    rationale += " Rejected " + label(alt) + ": ";
    if (!alt.feasible) {
      rationale += alt.note + ".";
    } else if (alt.capacity_gbps < c.capacity_gbps) {
      rationale += "lower capacity (" + fixed(alt.capacity_gbps, 0) + " Gbps).";
    } else {
      rationale += "equal capacity with lower preference (Q " + fixed(alt.q.value_db) + " dB).";
    }
  }
  report.rationale = rationale;
  report.native_impact_db = assess_native_impact(NativeContext{1});
  return report;
}

SpectrumGrid commit_plan(const PlanReport& report, const SpectrumGrid& grid, const std::string& sc_id) {
  const auto& c = report.chosen;
  if (c.start_slot < 0) throw PlanningError("chosen option has no spectrum placement");
  SpectrumGrid next = grid;
  if (c.carve_partition) {
    next = carve_dedicated_partition(next, c.start_slot, partition_width(grid.band));
  }
  SuperChannel sc;
  sc.id = sc_id;
  sc.start_slot = c.start_slot;
  sc.width_slots = grid.band.superchannel_width_slots;
  sc.active_carriers = c.active_carriers;
  const int lit_pairs = (c.active_carriers + 1) / 2;
  for (int i = 0; i < kPairsPerSuperChannel; ++i) {
    sc.pairs[i] = CarrierPair{i, c.pair_modulations[i], i < lit_pairs};
  }
  return place_superchannel(next, sc);
}

std::vector<Violation> validate_plan(const PlanReport& report, const SpectrumGrid& grid,
                                     const Thresholds& thresholds) {
  std::vector<Violation> out;
  const auto& c = report.chosen;
  if (c.q.value_db <= thresholds.hard_min_db) {
    out.push_back({"Q_BELOW_HARD_MIN", "chosen Q " + fixed(c.q.value_db) + " dB is not above " +
                                           fixed(thresholds.hard_min_db) + " dB"});
  }
  if (c.active_carriers < 0 || c.active_carriers > kCarriersPerSuperChannel ||
      std::abs(superchannel_capacity(c.pair_modulations, c.active_carriers) - c.capacity_gbps) > 1e-9) {
    out.push_back({"CAPACITY_MISMATCH", "capacity " + fixed(c.capacity_gbps, 0) +
                                            " Gbps does not match the pair modulations and carrier count"});
  }
  try {
    commit_plan(report, grid);
  } catch (const Error& e) {
    out.push_back({"PLACEMENT_CONFLICT", e.what()});
  }
  return out;
}

}  // namespace awplan
