#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "awplan/common.hpp"

namespace awplan {

/// C-band model at 25 GHz slot granularity. A native 50 GHz channel is two
/// slots aligned to an even index; a super-channel block is a contiguous run
/// of `superchannel_width_slots` slots.
struct BandConfig {
  double slot_width_ghz = 25.0;
  int slot_count = 160;
  int native_channel_width_slots = 2;
  int superchannel_width_slots = 8;

  bool operator==(const BandConfig&) const = default;
};

/// Legacy IM-DD channel of the host domain.
struct NativeChannel {
  std::string id;
  int start_slot = 0;
  int bitrate_gbps = 10;  // 10 or 40

  bool operator==(const NativeChannel&) const = default;
};

struct CarrierPair {
  int index = 0;
  Modulation modulation = Modulation::QPSK;
  bool enabled = true;

  bool operator==(const CarrierPair&) const = default;
};

inline constexpr int kPairsPerSuperChannel = 5;
inline constexpr int kCarriersPerSuperChannel = 2 * kPairsPerSuperChannel;

/// Coherent alien super-channel: ten carriers managed as five pairs.
struct SuperChannel {
  std::string id;
  int start_slot = 0;
  int width_slots = 8;
  std::array<CarrierPair, kPairsPerSuperChannel> pairs{};
  int active_carriers = kCarriersPerSuperChannel;

  int end_slot() const { return start_slot + width_slots; }
  int enabled_pairs() const;

  /// Every pair enabled with the same modulation.
  static SuperChannel uniform(std::string id, int start_slot, Modulation m,
                              int active_carriers = kCarriersPerSuperChannel,
                              int width_slots = 8);

  bool operator==(const SuperChannel&) const = default;
};

/// Spectrum reserved for alien carriers. Both edges sit on the 50 GHz grid.
struct DedicatedPartition {
  int start_slot = 0;
  int width_slots = 0;

  int end_slot() const { return start_slot + width_slots; }
  bool contains(int first, int end) const { return first >= start_slot && end <= end_slot(); }
  bool overlaps(int first, int end) const { return first < end_slot() && start_slot < end; }

  bool operator==(const DedicatedPartition&) const = default;
};

/// Natives adjacent to a super-channel, split by whether a guard band
/// separates them from the block.
struct NeighborConfig {
  int guarded_native_count = 0;
  int unguarded_native_count = 0;
  bool in_dedicated_partition = false;

  static NeighborConfig none() { return {}; }
  static NeighborConfig dedicated() { return {0, 0, true}; }

  bool operator==(const NeighborConfig&) const = default;
};

/// Owner of one slot in the occupancy map.
struct SlotOwner {
  enum class Kind { Free, Native, SuperChannel };
  Kind kind = Kind::Free;
  std::size_t index = 0;  // into natives or superchannels

  bool free() const { return kind == Kind::Free; }
};

/// Value type: every operation below returns an updated copy.
struct SpectrumGrid {
  BandConfig band;
  std::vector<NativeChannel> natives;
  std::vector<SuperChannel> superchannels;
  std::vector<DedicatedPartition> partitions;

  /// One entry per slot. Throws SpectrumError if two occupants collide.
  std::vector<SlotOwner> occupancy() const;
  const SuperChannel* find_superchannel(std::string_view id) const;
  const DedicatedPartition* partition_containing(int first, int end) const;
  bool has_occupant(std::string_view id) const;

  bool operator==(const SpectrumGrid&) const = default;
};

/// Codes: BAD_BAND, OUT_OF_BAND, MISALIGNED, OVERLAP, NATIVE_IN_PARTITION,
/// STRADDLES_PARTITION, PARTITION_OVERLAP, BAD_CARRIERS, BAD_BITRATE,
/// DUPLICATE_ID.
std::vector<Violation> validate_grid(const SpectrumGrid& grid);

SpectrumGrid place_native(const SpectrumGrid& grid, const NativeChannel& channel);
SpectrumGrid place_superchannel(const SpectrumGrid& grid, const SuperChannel& sc);
SpectrumGrid carve_dedicated_partition(const SpectrumGrid& grid, int start_slot, int width_slots);
SpectrumGrid remove_occupant(const SpectrumGrid& grid, std::string_view id);

/// Natives flanking super-channel `sc_id`. On each side the nearest native is
/// a neighbour when no further native channel would fit between it and the
/// block (gap < guard + native width). It is unguarded when the gap is below
/// `guard_band_slots`, guarded otherwise. Natives chained to it (abutting the
/// previous one, or themselves inside the guard window) share its class. The
/// scan stops at another super-channel. Blocks inside a dedicated partition
/// always report {0, 0, true}.
NeighborConfig neighbor_context(const SpectrumGrid& grid, std::string_view sc_id,
                                int guard_band_slots);

struct PlacementRequest {
  enum class Kind { Native, SuperChannel };
  Kind kind = Kind::Native;
  NativeChannel native;        // start_slot ignored
  SuperChannel superchannel;   // start_slot ignored
  bool partition_only = false;
  int guard_band_slots = 0;

  const std::string& id() const { return kind == Kind::Native ? native.id : superchannel.id; }

  static PlacementRequest for_native(NativeChannel ch, int guard_band_slots = 0);
  static PlacementRequest for_superchannel(SuperChannel sc, int guard_band_slots = 0,
                                           bool partition_only = false);

  bool operator==(const PlacementRequest&) const = default;
};

struct Assignment {
  std::string id;
  bool placed = false;
  int start_slot = -1;
  std::string reason;  // set when unplaced

  bool operator==(const Assignment&) const = default;
};

struct AllocationResult {
  SpectrumGrid grid;
  std::vector<Assignment> assignments;
};

/// Why `request` cannot start at `start_slot` on `grid`, or nullopt if it can.
std::optional<std::string> placement_blocker(const SpectrumGrid& grid,
                                             const PlacementRequest& request, int start_slot);

/// Places requests in input order, each at the lowest feasible start slot.
AllocationResult first_fit_allocate(const SpectrumGrid& grid,
                                    const std::vector<PlacementRequest>& requests);

}  // namespace awplan
