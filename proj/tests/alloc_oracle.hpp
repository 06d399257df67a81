#pragma once

// Brute-force first-fit reference used to check first_fit_allocate. It works
// on plain per-slot arrays and shares no placement code with the library.

#include <random>
#include <vector>

#include "awplan/spectrum.hpp"

namespace awplan::testing {

struct OracleState {
  int n = 0;
  std::vector<int> kind;       // 0 free, 1 native, 2 super-channel
  std::vector<int> partition;  // partition index or -1
};

inline OracleState oracle_state(const SpectrumGrid& g) {
  OracleState st;
  st.n = g.band.slot_count;
  st.kind.assign(st.n, 0);
  st.partition.assign(st.n, -1);
  for (std::size_t p = 0; p < g.partitions.size(); ++p) {
    for (int s = g.partitions[p].start_slot; s < g.partitions[p].start_slot + g.partitions[p].width_slots; ++s) {
      st.partition[s] = static_cast<int>(p);
    }
  }
  for (const auto& nat : g.natives) {
    st.kind[nat.start_slot] = st.kind[nat.start_slot + 1] = 1;
  }
  for (const auto& sc : g.superchannels) {
    for (int s = sc.start_slot; s < sc.start_slot + sc.width_slots; ++s) st.kind[s] = 2;
  }
  return st;
}

inline bool oracle_fits(const OracleState& st, const PlacementRequest& r, int s) {
  const bool native = r.kind == PlacementRequest::Kind::Native;
  const int w = native ? 2 : r.superchannel.width_slots;
  if (s < 0 || s + w > st.n) return false;
  if (native && s % 2 != 0) return false;
  for (int i = s; i < s + w; ++i) {
    if (st.kind[i] != 0) return false;
  }
  const int part = st.partition[s];
  for (int i = s; i < s + w; ++i) {
    if (st.partition[i] != part) return false;  // straddles a boundary
  }
  if (native) {
    if (r.partition_only || part >= 0) return false;
  } else {
    int enabled = 0;
    for (const auto& p : r.superchannel.pairs) enabled += p.enabled;
    const int a = r.superchannel.active_carriers;
    const bool ok = a == 2 * enabled || (part >= 0 && enabled > 0 && a == 2 * enabled - 1);
    if (!ok) return false;
    if (r.partition_only && part < 0) return false;
  }
  const int other = native ? 2 : 1;
  for (int i = s - r.guard_band_slots; i < s + w + r.guard_band_slots; ++i) {
    if (i >= s && i < s + w) continue;
    if (i >= 0 && i < st.n && st.kind[i] == other) return false;
  }
  return true;
}

/// Start slot per request, -1 when unplaced.
inline std::vector<int> oracle_first_fit(const SpectrumGrid& grid, const std::vector<PlacementRequest>& reqs) {
  OracleState st = oracle_state(grid);
  std::vector<int> out;
  for (const auto& r : reqs) {
    int chosen = -1;
    for (int s = 0; s < st.n && chosen < 0; ++s) {
      if (oracle_fits(st, r, s)) chosen = s;
    }
    if (chosen >= 0) {
      const bool native = r.kind == PlacementRequest::Kind::Native;
      const int w = native ? 2 : r.superchannel.width_slots;
      for (int i = chosen; i < chosen + w; ++i) st.kind[i] = native ? 1 : 2;
    }
    out.push_back(chosen);
  }
  return out;
}

struct RandomInstance {
  SpectrumGrid grid;
  std::vector<PlacementRequest> requests;
};

/// Band of at most 32 slots with up to two partitions and 3-10 mixed requests.
inline RandomInstance random_instance(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng); };
  RandomInstance inst;
  auto& g = inst.grid;
  g.band.slot_count = 2 * pick(4, 16);
  g.band.superchannel_width_slots = pick(2, 8);

  const int parts = pick(0, 2);
  int cursor = 0;
  for (int p = 0; p < parts; ++p) {
    const int start = cursor + 2 * pick(0, 4);
    const int width = 2 * pick(1, 5);
    if (start + width > g.band.slot_count) break;
    g.partitions.push_back({start, width});
    cursor = start + width;
  }

  const int count = pick(3, 10);
  for (int i = 0; i < count; ++i) {
    const std::string id = "r" + std::to_string(i);
    if (pick(0, 1) == 0) {
      auto r = PlacementRequest::for_native({id, 0, pick(0, 1) ? 10 : 40}, pick(0, 3));
      r.partition_only = pick(0, 9) == 0;
      inst.requests.push_back(r);
    } else {
      auto sc = SuperChannel::uniform(id, 0, pick(0, 1) ? Modulation::QPSK : Modulation::BPSK,
                                      pick(0, 2) == 0 ? 9 : 10, g.band.superchannel_width_slots);
      inst.requests.push_back(PlacementRequest::for_superchannel(sc, pick(0, 3), pick(0, 3) == 0));
    }
  }
  return inst;
}

}  // namespace awplan::testing
