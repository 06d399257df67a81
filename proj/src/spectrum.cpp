#include "awplan/spectrum.hpp"

#include <set>

namespace awplan {

namespace {

std::string span_text(int first, int end) {
  return "[" + std::to_string(first) + ", " + std::to_string(end) + ")";
}

bool in_band(const BandConfig& band, int first, int end) {
  return first >= 0 && end <= band.slot_count && first < end;
}

// Carrier count is 2 per enabled pair, or one fewer when an edge carrier is
// sacrificed inside a dedicated partition.
bool carrier_count_consistent(const SuperChannel& sc, bool in_partition) {
  const int full = 2 * sc.enabled_pairs();
  if (sc.active_carriers == full) return true;
  return in_partition && full > 0 && sc.active_carriers == full - 1;
}

void throw_first(const std::vector<Violation>& v) {
  if (!v.empty()) throw SpectrumError(v.front().code + ": " + v.front().message);
}

}  // namespace

int SuperChannel::enabled_pairs() const {
  int n = 0;
  for (const auto& p : pairs) n += p.enabled ? 1 : 0;
  return n;
}

SuperChannel SuperChannel::uniform(std::string id, int start_slot, Modulation m,
                                   int active_carriers, int width_slots) {
  SuperChannel sc;
  sc.id = std::move(id);
  sc.start_slot = start_slot;
  sc.width_slots = width_slots;
  for (int i = 0; i < kPairsPerSuperChannel; ++i) sc.pairs[i] = CarrierPair{i, m, true};
  sc.active_carriers = active_carriers;
  return sc;
}

std::vector<SlotOwner> SpectrumGrid::occupancy() const {
  std::vector<SlotOwner> map(static_cast<std::size_t>(std::max(band.slot_count, 0)));
  auto claim = [&](int first, int end, SlotOwner owner, const std::string& id) {
    for (int s = first; s < end; ++s) {
      if (s < 0 || s >= band.slot_count) {
        throw SpectrumError("OUT_OF_BAND: '" + id + "' occupies slot " + std::to_string(s));
      }
      if (!map[s].free()) {
        throw SpectrumError("OVERLAP: '" + id + "' collides at slot " + std::to_string(s));
      }
      map[s] = owner;
    }
  };
  for (std::size_t i = 0; i < natives.size(); ++i) {
    const auto& n = natives[i];
    claim(n.start_slot, n.start_slot + band.native_channel_width_slots,
          {SlotOwner::Kind::Native, i}, n.id);
  }
  for (std::size_t i = 0; i < superchannels.size(); ++i) {
    const auto& sc = superchannels[i];
    claim(sc.start_slot, sc.end_slot(), {SlotOwner::Kind::SuperChannel, i}, sc.id);
  }
  return map;
}

const SuperChannel* SpectrumGrid::find_superchannel(std::string_view id) const {
  for (const auto& sc : superchannels) {
    if (sc.id == id) return &sc;
  }
  return nullptr;
}

const DedicatedPartition* SpectrumGrid::partition_containing(int first, int end) const {
  for (const auto& p : partitions) {
    if (p.contains(first, end)) return &p;
  }
  return nullptr;
}

bool SpectrumGrid::has_occupant(std::string_view id) const {
  for (const auto& n : natives) {
    if (n.id == id) return true;
  }
  return find_superchannel(id) != nullptr;
}

std::vector<Violation> validate_grid(const SpectrumGrid& grid) {
  std::vector<Violation> out;
  const auto& band = grid.band;
  if (band.slot_width_ghz != 25.0 || band.slot_count <= 0 || band.slot_count % 2 != 0 ||
      band.native_channel_width_slots != 2 || band.superchannel_width_slots <= 0) {
    out.push_back({"BAD_BAND",
                   "band must use 25 GHz slots, an even positive slot count, 2-slot natives "
                   "and a positive super-channel width"});
    return out;
  }

  for (std::size_t i = 0; i < grid.partitions.size(); ++i) {
    const auto& p = grid.partitions[i];
    const auto where = "partition " + span_text(p.start_slot, p.end_slot());
    if (p.width_slots <= 0 || p.start_slot % 2 != 0 || p.end_slot() % 2 != 0) {
      out.push_back({"MISALIGNED", where + " must have positive width and even boundaries"});
    }
    if (!in_band(band, p.start_slot, p.end_slot())) {
      out.push_back({"OUT_OF_BAND", where + " lies outside the band"});
    }
    for (std::size_t j = i + 1; j < grid.partitions.size(); ++j) {
      const auto& q = grid.partitions[j];
      if (p.overlaps(q.start_slot, q.end_slot())) {
        out.push_back({"PARTITION_OVERLAP",
                       where + " overlaps partition " + span_text(q.start_slot, q.end_slot())});
      }
    }
  }

  std::set<std::string> ids;
  auto check_id = [&](const std::string& id) {
    if (id.empty()) {
      out.push_back({"DUPLICATE_ID", "occupant with empty id"});
    } else if (!ids.insert(id).second) {
      out.push_back({"DUPLICATE_ID", "occupant id '" + id + "' used twice"});
    }
  };

  std::vector<std::string> owner(static_cast<std::size_t>(band.slot_count));
  auto claim = [&](const std::string& id, int first, int end) {
    if (!in_band(band, first, end)) {
      out.push_back({"OUT_OF_BAND", "'" + id + "' at " + span_text(first, end) +
                                        " lies outside [0, " + std::to_string(band.slot_count) + ")"});
      return;
    }
    for (int s = first; s < end; ++s) {
      if (!owner[s].empty()) {
        out.push_back({"OVERLAP", "'" + id + "' overlaps '" + owner[s] + "' at slot " +
                                      std::to_string(s)});
        return;
      }
    }
    for (int s = first; s < end; ++s) owner[s] = id;
  };

  for (const auto& n : grid.natives) {
    check_id(n.id);
    const int end = n.start_slot + band.native_channel_width_slots;
    if (n.bitrate_gbps != 10 && n.bitrate_gbps != 40) {
      out.push_back({"BAD_BITRATE", "native '" + n.id + "' bitrate must be 10 or 40 Gbps"});
    }
    if (n.start_slot % 2 != 0) {
      out.push_back({"MISALIGNED", "native '" + n.id + "' start slot " +
                                       std::to_string(n.start_slot) + " is not on the 50 GHz grid"});
    }
    for (const auto& p : grid.partitions) {
      if (p.overlaps(n.start_slot, end)) {
        out.push_back({"NATIVE_IN_PARTITION",
                       "native '" + n.id + "' lies inside dedicated partition " +
                           span_text(p.start_slot, p.end_slot())});
      }
    }
    claim(n.id, n.start_slot, end);
  }

  for (const auto& sc : grid.superchannels) {
    check_id(sc.id);
    if (sc.width_slots != band.superchannel_width_slots) {
      out.push_back({"BAD_CARRIERS", "super-channel '" + sc.id + "' width must be " +
                                         std::to_string(band.superchannel_width_slots) + " slots"});
    }
    bool inside = grid.partition_containing(sc.start_slot, sc.end_slot()) != nullptr;
    if (!inside) {
      for (const auto& p : grid.partitions) {
        if (p.overlaps(sc.start_slot, sc.end_slot())) {
          out.push_back({"STRADDLES_PARTITION",
                         "super-channel '" + sc.id + "' straddles partition " +
                             span_text(p.start_slot, p.end_slot())});
        }
      }
    }
    bool pairs_ok = true;
    for (int i = 0; i < kPairsPerSuperChannel; ++i) pairs_ok = pairs_ok && sc.pairs[i].index == i;
    if (!pairs_ok || sc.active_carriers < 0 || sc.active_carriers > kCarriersPerSuperChannel ||
        !carrier_count_consistent(sc, inside)) {
      out.push_back({"BAD_CARRIERS",
                     "super-channel '" + sc.id + "' has " + std::to_string(sc.active_carriers) +
                         " active carriers for " + std::to_string(sc.enabled_pairs()) +
                         " enabled pairs"});
    }
    claim(sc.id, sc.start_slot, sc.end_slot());
  }
  return out;
}

SpectrumGrid place_native(const SpectrumGrid& grid, const NativeChannel& channel) {
  if (grid.has_occupant(channel.id)) {
    throw SpectrumError("DUPLICATE_ID: occupant id '" + channel.id + "' already placed");
  }
  SpectrumGrid next = grid;
  next.natives.push_back(channel);
  throw_first(validate_grid(next));
  return next;
}

SpectrumGrid place_superchannel(const SpectrumGrid& grid, const SuperChannel& sc) {
  if (grid.has_occupant(sc.id)) {
    throw SpectrumError("DUPLICATE_ID: occupant id '" + sc.id + "' already placed");
  }
  SpectrumGrid next = grid;
  next.superchannels.push_back(sc);
  throw_first(validate_grid(next));
  return next;
}

SpectrumGrid carve_dedicated_partition(const SpectrumGrid& grid, int start_slot, int width_slots) {
  const int end = start_slot + width_slots;
  if (width_slots <= 0 || start_slot % 2 != 0 || end % 2 != 0) {
    throw SpectrumError("MISALIGNED: partition " + span_text(start_slot, end) +
                        " must have positive width and even boundaries");
  }
  for (const auto& n : grid.natives) {
    if (n.start_slot < end && start_slot < n.start_slot + grid.band.native_channel_width_slots) {
      throw SpectrumError("REGION_OCCUPIED: partition " + span_text(start_slot, end) +
                          " contains native '" + n.id + "'");
    }
  }
  SpectrumGrid next = grid;
  next.partitions.push_back({start_slot, width_slots});
  throw_first(validate_grid(next));
  return next;
}

SpectrumGrid remove_occupant(const SpectrumGrid& grid, std::string_view id) {
  SpectrumGrid next = grid;
  std::erase_if(next.natives, [&](const NativeChannel& n) { return n.id == id; });
  std::erase_if(next.superchannels, [&](const SuperChannel& s) { return s.id == id; });
  if (next.natives.size() + next.superchannels.size() ==
      grid.natives.size() + grid.superchannels.size()) {
    throw SpectrumError("unknown occupant '" + std::string(id) + "'");
  }
  return next;
}

NeighborConfig neighbor_context(const SpectrumGrid& grid, std::string_view sc_id,
                                int guard_band_slots) {
  const SuperChannel* sc = grid.find_superchannel(sc_id);
  if (sc == nullptr) throw SpectrumError("unknown super-channel '" + std::string(sc_id) + "'");
  if (grid.partition_containing(sc->start_slot, sc->end_slot()) != nullptr) {
    return NeighborConfig::dedicated();
  }

  const auto map = grid.occupancy();
  const int n = grid.band.slot_count;
  const int width = grid.band.native_channel_width_slots;
  NeighborConfig cfg;

  // step = +1 scans above the block, -1 below it. `gap` is the count of free
  // slots between the block edge and the native's nearest slot.
  for (int step : {+1, -1}) {
    int edge = step > 0 ? sc->end_slot() : sc->start_slot - 1;
    int pos = edge;
    bool first = true;
    bool unguarded = false;
    while (pos >= 0 && pos < n) {
      const int probe_start = pos;
      while (pos >= 0 && pos < n && map[pos].free()) pos += step;
      if (pos < 0 || pos >= n || map[pos].kind != SlotOwner::Kind::Native) break;
      const int gap = (pos - edge) * step;
      const bool abutting = pos == probe_start;
      if (first) {
        if (gap >= guard_band_slots + width) break;
        unguarded = gap < guard_band_slots;
        first = false;
      } else if (!abutting && gap >= guard_band_slots) {
        break;
      }
      (unguarded ? cfg.unguarded_native_count : cfg.guarded_native_count) += 1;
      pos += step * width;
    }
  }
  return cfg;
}

PlacementRequest PlacementRequest::for_native(NativeChannel ch, int guard_band_slots) {
  PlacementRequest r;
  r.kind = Kind::Native;
  r.native = std::move(ch);
  r.guard_band_slots = guard_band_slots;
  return r;
}

PlacementRequest PlacementRequest::for_superchannel(SuperChannel sc, int guard_band_slots,
                                                    bool partition_only) {
  PlacementRequest r;
  r.kind = Kind::SuperChannel;
  r.superchannel = std::move(sc);
  r.guard_band_slots = guard_band_slots;
  r.partition_only = partition_only;
  return r;
}

std::optional<std::string> placement_blocker(const SpectrumGrid& grid,
                                             const PlacementRequest& request, int start_slot) {
  const auto& band = grid.band;
  const bool native = request.kind == PlacementRequest::Kind::Native;
  const int width = native ? band.native_channel_width_slots : request.superchannel.width_slots;
  const int end = start_slot + width;

  if (!in_band(band, start_slot, end)) return "out of band";
  if (native && start_slot % 2 != 0) return "misaligned";

  const auto map = grid.occupancy();
  for (int s = start_slot; s < end; ++s) {
    if (!map[s].free()) return "overlap at slot " + std::to_string(s);
  }

  const bool inside = grid.partition_containing(start_slot, end) != nullptr;
  bool overlaps_partition = false;
  for (const auto& p : grid.partitions) overlaps_partition |= p.overlaps(start_slot, end);

  if (native) {
    if (request.partition_only) return "natives cannot occupy a dedicated partition";
    if (overlaps_partition) return "inside dedicated partition";
  } else {
    if (overlaps_partition && !inside) return "straddles partition";
    if (request.partition_only && !inside) return "outside dedicated partition";
    const auto& sc = request.superchannel;
    if (!carrier_count_consistent(sc, inside)) return "carrier count needs a dedicated partition";
  }

  // Guard band: no occupant of the opposite kind within guard slots of either edge.
  const auto opposite = native ? SlotOwner::Kind::SuperChannel : SlotOwner::Kind::Native;
  const int g = request.guard_band_slots;
  for (int s = start_slot - g; s < end + g; ++s) {
    if (s >= start_slot && s < end) continue;
    if (s >= 0 && s < band.slot_count && map[s].kind == opposite) {
      return "guard band violated at slot " + std::to_string(s);
    }
  }
  return std::nullopt;
}

AllocationResult first_fit_allocate(const SpectrumGrid& grid,
                                    const std::vector<PlacementRequest>& requests) {
  AllocationResult result{grid, {}};
  for (const auto& req : requests) {
    Assignment a{req.id(), false, -1, ""};
    if (result.grid.has_occupant(req.id())) {
      a.reason = "duplicate id";
      result.assignments.push_back(a);
      continue;
    }
    for (int s = 0; s < result.grid.band.slot_count; ++s) {
      if (placement_blocker(result.grid, req, s)) continue;
      if (req.kind == PlacementRequest::Kind::Native) {
        auto ch = req.native;
        ch.start_slot = s;
        result.grid = place_native(result.grid, ch);
      } else {
        auto sc = req.superchannel;
        sc.start_slot = s;
        result.grid = place_superchannel(result.grid, sc);
      }
      a.placed = true;
      a.start_slot = s;
      break;
    }
    if (!a.placed) a.reason = "no feasible window";
    result.assignments.push_back(a);
  }
  return result;
}

}  // namespace awplan
