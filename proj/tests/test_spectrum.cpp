#include "awplan/spectrum.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "alloc_oracle.hpp"

namespace awplan {
namespace {

SpectrumGrid with_natives(std::initializer_list<int> slots) {
  SpectrumGrid g;
  for (int s : slots) g = place_native(g, {"N" + std::to_string(s), s, 10});
  return g;
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const SpectrumError& e) {
    return e.what();
  }
  return "";
}

TEST(PlaceNative, EmptyGridSlotZero) {
  auto g = place_native(SpectrumGrid{}, {"N0", 0, 10});
  ASSERT_EQ(g.natives.size(), 1u);
  auto occ = g.occupancy();
  EXPECT_EQ(occ[0].kind, SlotOwner::Kind::Native);
  EXPECT_EQ(occ[1].kind, SlotOwner::Kind::Native);
  EXPECT_TRUE(occ[2].free());
}

TEST(PlaceNative, Errors) {
  auto g = with_natives({0});
  EXPECT_EQ(error_of([&] { place_native(g, {"N0b", 0, 10}); }).rfind("OVERLAP", 0), 0u);
  EXPECT_EQ(error_of([&] { place_native(g, {"N3", 3, 10}); }).rfind("MISALIGNED", 0), 0u);
  EXPECT_EQ(error_of([&] { place_native(g, {"N160", 160, 10}); }).rfind("OUT_OF_BAND", 0), 0u);
  EXPECT_EQ(error_of([&] { place_native(g, {"N4", 4, 25}); }).rfind("BAD_BITRATE", 0), 0u);
  EXPECT_EQ(error_of([&] { place_native(g, {"N0", 10, 10}); }).rfind("DUPLICATE_ID", 0), 0u);

  auto carved = carve_dedicated_partition(SpectrumGrid{}, 80, 8);
  EXPECT_EQ(error_of([&] { place_native(carved, {"N82", 82, 10}); }).rfind("NATIVE_IN_PARTITION", 0), 0u);
}

TEST(PlaceSuperChannel, Examples) {
  auto g = place_superchannel(SpectrumGrid{}, SuperChannel::uniform("AW", 0, Modulation::QPSK));
  auto occ = g.occupancy();
  for (int s = 0; s < 8; ++s) EXPECT_EQ(occ[s].kind, SlotOwner::Kind::SuperChannel);
  EXPECT_TRUE(occ[8].free());

  auto beside = place_superchannel(with_natives({8}), SuperChannel::uniform("AW", 0, Modulation::QPSK));
  EXPECT_EQ(neighbor_context(beside, "AW", 2), (NeighborConfig{0, 1, false}));

  EXPECT_EQ(error_of([] { place_superchannel(SpectrumGrid{}, SuperChannel::uniform("AW", 156, Modulation::QPSK)); })
                .rfind("OUT_OF_BAND", 0),
            0u);
}

TEST(PlaceSuperChannel, PartitionRules) {
  auto carved = carve_dedicated_partition(SpectrumGrid{}, 80, 8);
  EXPECT_EQ(error_of([&] { place_superchannel(carved, SuperChannel::uniform("AW", 76, Modulation::QPSK)); })
                .rfind("STRADDLES_PARTITION", 0),
            0u);
  // Nine carriers are only legal inside a partition.
  EXPECT_EQ(error_of([&] { place_superchannel(carved, SuperChannel::uniform("AW", 0, Modulation::QPSK, 9)); })
                .rfind("BAD_CARRIERS", 0),
            0u);
  auto placed = place_superchannel(carved, SuperChannel::uniform("AW", 80, Modulation::QPSK, 9));
  EXPECT_EQ(neighbor_context(placed, "AW", 2), NeighborConfig::dedicated());
}

TEST(CarvePartition, Examples) {
  auto g = carve_dedicated_partition(SpectrumGrid{}, 80, 8);
  ASSERT_EQ(g.partitions.size(), 1u);
  EXPECT_EQ(g.partitions[0].width_slots * g.band.slot_width_ghz, 200.0);

  EXPECT_EQ(error_of([] { carve_dedicated_partition(with_natives({82}), 80, 8); }).rfind("REGION_OCCUPIED", 0), 0u);
  EXPECT_EQ(error_of([] { carve_dedicated_partition(SpectrumGrid{}, 81, 8); }).rfind("MISALIGNED", 0), 0u);
  EXPECT_EQ(error_of([&] { carve_dedicated_partition(g, 84, 8); }).rfind("PARTITION_OVERLAP", 0), 0u);
}

TEST(NeighborContext, GuardedPairMirrorsTwoNativeRow) {
  auto g = place_superchannel(with_natives({10, 12}), SuperChannel::uniform("AW", 0, Modulation::QPSK));
  EXPECT_EQ(neighbor_context(g, "AW", 2), (NeighborConfig{2, 0, false}));
}

TEST(NeighborContext, FiveAbuttingNatives) {
  auto g = place_superchannel(with_natives({8, 10, 12, 14, 16}), SuperChannel::uniform("AW", 0, Modulation::QPSK));
  EXPECT_EQ(neighbor_context(g, "AW", 2), (NeighborConfig{0, 5, false}));
}

TEST(NeighborContext, TwoGuardedPlusThreeUnguarded) {
  // Three natives stacked directly below the block, two guarded above it.
  auto g = place_superchannel(with_natives({0, 2, 4, 16, 18}), SuperChannel::uniform("AW", 6, Modulation::QPSK));
  EXPECT_EQ(neighbor_context(g, "AW", 2), (NeighborConfig{2, 3, false}));
}

TEST(NeighborContext, FarNativesAndOtherSuperChannels) {
  // Room for a whole native between block and channel: not a neighbour.
  auto far = place_superchannel(with_natives({12}), SuperChannel::uniform("AW", 0, Modulation::QPSK));
  EXPECT_EQ(neighbor_context(far, "AW", 2), NeighborConfig::none());
  // A second super-channel stops the scan.
  auto g = place_superchannel(with_natives({16}), SuperChannel::uniform("AW", 0, Modulation::QPSK));
  g = place_superchannel(g, SuperChannel::uniform("AW2", 8, Modulation::QPSK));
  EXPECT_EQ(neighbor_context(g, "AW", 2), NeighborConfig::none());
  EXPECT_EQ(neighbor_context(g, "AW2", 2), (NeighborConfig{0, 1, false}));
  EXPECT_THROW(neighbor_context(g, "missing", 2), SpectrumError);
}

TEST(FirstFit, NativesThenGuardedSuperChannel) {
  std::vector<PlacementRequest> reqs{
      PlacementRequest::for_native({"N1", 0, 10}), PlacementRequest::for_native({"N2", 0, 10}),
      PlacementRequest::for_superchannel(SuperChannel::uniform("AW", 0, Modulation::QPSK), 2)};
  auto r = first_fit_allocate(SpectrumGrid{}, reqs);
  ASSERT_EQ(r.assignments.size(), 3u);
  EXPECT_EQ(r.assignments[0].start_slot, 0);
  EXPECT_EQ(r.assignments[1].start_slot, 2);
  EXPECT_EQ(r.assignments[2].start_slot, 6);
  EXPECT_EQ(testing::oracle_first_fit(SpectrumGrid{}, reqs), (std::vector<int>{0, 2, 6}));
}

TEST(FirstFit, FullGridLeavesRequestUnplaced) {
  SpectrumGrid g;
  for (int s = 0; s < 160; s += 2) g = place_native(g, {"N" + std::to_string(s), s, 10});
  auto r = first_fit_allocate(g, {PlacementRequest::for_native({"X", 0, 10}),
                                  PlacementRequest::for_superchannel(SuperChannel::uniform("AW", 0, Modulation::BPSK))});
  for (const auto& a : r.assignments) {
    EXPECT_FALSE(a.placed);
    EXPECT_EQ(a.reason, "no feasible window");
  }
  EXPECT_EQ(r.grid, g);
}

TEST(FirstFit, PartitionOnlyLandsInPartition) {
  auto g = carve_dedicated_partition(SpectrumGrid{}, 80, 8);
  auto r = first_fit_allocate(
      g, {PlacementRequest::for_superchannel(SuperChannel::uniform("AW", 0, Modulation::QPSK, 9), 0, true)});
  ASSERT_TRUE(r.assignments[0].placed);
  EXPECT_EQ(r.assignments[0].start_slot, 80);
}

TEST(FirstFit, MatchesBruteForceOracle) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    auto inst = testing::random_instance(rng);
    ASSERT_TRUE(validate_grid(inst.grid).empty());
    auto result = first_fit_allocate(inst.grid, inst.requests);
    auto expected = testing::oracle_first_fit(inst.grid, inst.requests);
    ASSERT_EQ(result.assignments.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(result.assignments[i].start_slot, expected[i]) << "trial " << trial << " request " << i;
      EXPECT_EQ(result.assignments[i].placed, expected[i] >= 0);
    }
    EXPECT_TRUE(validate_grid(result.grid).empty());
    EXPECT_NO_THROW(result.grid.occupancy());
  }
}

TEST(Grid, RemoveThenReplaceIsIdentity) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = testing::random_instance(rng);
    auto grid = first_fit_allocate(inst.grid, inst.requests).grid;
    auto by_id = [](auto v) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
      return v;
    };
    for (const auto& n : grid.natives) {
      auto again = place_native(remove_occupant(grid, n.id), n);
      EXPECT_EQ(by_id(again.natives), by_id(grid.natives));
      EXPECT_EQ(again.superchannels, grid.superchannels);
    }
    for (const auto& sc : grid.superchannels) {
      auto again = place_superchannel(remove_occupant(grid, sc.id), sc);
      EXPECT_EQ(by_id(again.superchannels), by_id(grid.superchannels));
      EXPECT_EQ(again.natives, grid.natives);
      if (grid.partition_containing(sc.start_slot, sc.end_slot())) {
        EXPECT_EQ(neighbor_context(grid, sc.id, 2), NeighborConfig::dedicated());
      }
    }
  }
  EXPECT_THROW(remove_occupant(SpectrumGrid{}, "nobody"), SpectrumError);
}

}  // namespace
}  // namespace awplan
