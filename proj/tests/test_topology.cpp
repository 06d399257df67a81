#include "awplan/topology.hpp"

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace awplan {
namespace {

using testing::fixture_demand;
using testing::garr_topology;

constexpr const char* kTwoNodes = R"({
  "nodes": [{"id": "BO1", "name": "Bologna", "has_roadm": true},
            {"id": "MI1", "name": "Milano", "has_roadm": true}],
  "spans": [{"from": "BO1", "to": "MI1", "length_km": 277, "attenuation_db": 78,
             "amplifier": "EDFA", "dcm_present": true, "has_inline_ola": false}]
})";

TEST(ParseTopology, TwoNodesOneSpan) {
  auto t = parse_topology(kTwoNodes);
  EXPECT_EQ(t.nodes.size(), 2u);
  ASSERT_EQ(t.spans.size(), 1u);
  EXPECT_EQ(t.spans[0].length_km, 277.0);
  EXPECT_EQ(t.spans[0].attenuation_db, 78.0);
}

TEST(ParseTopology, SingleNodeNoSpans) {
  auto t = parse_topology(R"({"nodes":[{"id":"A","name":"A","has_roadm":true}],"spans":[]})");
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_TRUE(t.spans.empty());
  std::vector<std::string> path{"A"};
  EXPECT_EQ(aggregate_path(t, path), (PathMetrics{0, 0, 0, 1, 0}));
}

TEST(ParseTopology, DanglingEndpointIsRejected) {
  const char* doc = R"({"nodes":[{"id":"A","name":"A","has_roadm":true}],
    "spans":[{"from":"A","to":"XX","length_km":10,"attenuation_db":3,"amplifier":"EDFA",
              "dcm_present":false,"has_inline_ola":false}]})";
  try {
    parse_topology(doc);
    FAIL() << "expected TopologyError";
  } catch (const TopologyError& e) {
    EXPECT_NE(std::string(e.what()).find("DANGLING_ENDPOINT"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("XX"), std::string::npos);
  }
}

TEST(ParseTopology, DuplicateNodeIsRejected) {
  const char* doc = R"({"nodes":[{"id":"A","name":"A","has_roadm":true},
                                  {"id":"A","name":"again","has_roadm":false}],"spans":[]})";
  EXPECT_THROW(parse_topology(doc), TopologyError);
}

TEST(ParseTopology, SchemaViolationNamesField) {
  const char* doc = R"({"nodes":[{"id":"A","name":"A","has_roadm":true},{"id":"B","name":"B","has_roadm":true}],
    "spans":[{"from":"A","to":"B","length_km":"far","attenuation_db":3,"amplifier":"EDFA",
              "dcm_present":false,"has_inline_ola":false}]})";
  try {
    parse_topology(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("/spans/0/length_km"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_topology(R"({"nodes":[]})"), ParseError);
  EXPECT_THROW(parse_topology(R"({"nodes":[{"id":"A","name":"A","has_roadm":true}],"spans":[
    {"from":"A","to":"A","length_km":1,"attenuation_db":1,"amplifier":"Laser","dcm_present":false,
     "has_inline_ola":false}]})"), ParseError);
}

TEST(ValidateTopology, ValidChainHasNoViolations) {
  NetworkTopology t;
  for (auto id : {"A", "B", "C", "D"}) t.nodes.push_back({id, id, true});
  t.spans = {{"A", "B", 10, 2, Amplifier::EDFA, false, false},
             {"B", "C", 10, 2, Amplifier::Raman, false, false},
             {"C", "D", 10, 2, Amplifier::EDFA, false, false}};
  EXPECT_TRUE(validate_topology(t).empty());
}

TEST(ValidateTopology, NegativeLength) {
  NetworkTopology t;
  t.nodes = {{"A", "A", true}, {"B", "B", true}};
  t.spans = {{"A", "B", -5, 2, Amplifier::EDFA, false, false}};
  auto v = validate_topology(t);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, "NEGATIVE_LENGTH");
}

TEST(ValidateTopology, DuplicateNode) {
  NetworkTopology t;
  t.nodes = {{"A", "A", true}, {"A", "A2", false}};
  auto v = validate_topology(t);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, "DUPLICATE_NODE");
}

TEST(ValidateTopology, SelfLoopAndAttenuation) {
  NetworkTopology t;
  t.nodes = {{"A", "A", true}};
  t.spans = {{"A", "A", 1, 0, Amplifier::EDFA, false, false}};
  auto v = validate_topology(t);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].code, "SELF_LOOP");
  EXPECT_EQ(v[1].code, "NEGATIVE_ATTENUATION");
}

// Production link table rows: distance, attenuation, #OLA, #ROADM, #Raman.
TEST(AggregatePath, ProductionLinkTable) {
  const auto t = garr_topology();
  EXPECT_EQ(aggregate_path(t, fixture_demand("bo1-mi1").path), (PathMetrics{277, 78, 2, 2, 1}));
  EXPECT_EQ(aggregate_path(t, fixture_demand("rm2-bo1").path), (PathMetrics{495, 105, 4, 3, 3}));
  EXPECT_EQ(aggregate_path(t, fixture_demand("ba1-bo1").path), (PathMetrics{813, 232, 10, 6, 2}));
  EXPECT_EQ(aggregate_path(t, fixture_demand("rm-mi2").path), (PathMetrics{1131, 325, 12, 5, 3}));
}

TEST(AggregatePath, Errors) {
  const auto t = garr_topology();
  std::vector<std::string> empty;
  EXPECT_THROW(aggregate_path(t, empty), TopologyError);
  std::vector<std::string> gap{"BO1", "RM2"};
  try {
    aggregate_path(t, gap);
    FAIL();
  } catch (const TopologyError& e) {
    EXPECT_NE(std::string(e.what()).find("BO1 and RM2"), std::string::npos) << e.what();
  }
  std::vector<std::string> unknown{"BO1", "ZZ"};
  EXPECT_THROW(aggregate_path(t, unknown), TopologyError);
}

// Random chains: split additivity and reversal symmetry.
TEST(AggregatePath, SplitAdditivityAndReversal) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    NetworkTopology t;
    const int n = std::uniform_int_distribution<>(2, 9)(rng);
    for (int i = 0; i < n; ++i) {
      t.nodes.push_back({"n" + std::to_string(i), "", std::bernoulli_distribution(0.7)(rng)});
    }
    for (int i = 0; i + 1 < n; ++i) {
      const int segments = std::uniform_int_distribution<>(1, 4)(rng);
      for (int s = 0; s < segments; ++s) {
        t.spans.push_back({t.nodes[i].id, t.nodes[i + 1].id,
                           static_cast<double>(std::uniform_int_distribution<>(10, 120)(rng)),
                           std::uniform_real_distribution<>(1.0, 40.0)(rng),
                           std::bernoulli_distribution(0.3)(rng) ? Amplifier::Raman : Amplifier::EDFA,
                           true, s + 1 < segments});
      }
    }
    ASSERT_TRUE(validate_topology(t).empty());

    std::vector<std::string> seq;
    for (const auto& node : t.nodes) seq.push_back(node.id);
    const int k = std::uniform_int_distribution<>(0, n - 1)(rng);
    std::vector<std::string> left(seq.begin(), seq.begin() + k + 1);
    std::vector<std::string> right(seq.begin() + k, seq.end());

    const auto whole = aggregate_path(t, seq);
    const auto a = aggregate_path(t, left);
    const auto b = aggregate_path(t, right);
    EXPECT_NEAR(whole.distance_km, a.distance_km + b.distance_km, 1e-9);
    EXPECT_NEAR(whole.attenuation_db, a.attenuation_db + b.attenuation_db, 1e-9);
    EXPECT_EQ(whole.ola_count, a.ola_count + b.ola_count);
    EXPECT_EQ(whole.raman_span_count, a.raman_span_count + b.raman_span_count);
    EXPECT_EQ(whole.roadm_count, a.roadm_count + b.roadm_count - (t.nodes[k].has_roadm ? 1 : 0));

    std::vector<std::string> reversed(seq.rbegin(), seq.rend());
    const auto back = aggregate_path(t, reversed);
    EXPECT_NEAR(back.distance_km, whole.distance_km, 1e-9);
    EXPECT_NEAR(back.attenuation_db, whole.attenuation_db, 1e-9);
    EXPECT_EQ(back.ola_count, whole.ola_count);
    EXPECT_EQ(back.roadm_count, whole.roadm_count);
    EXPECT_EQ(back.raman_span_count, whole.raman_span_count);
    EXPECT_LE(whole.raman_span_count, static_cast<int>(t.spans.size()));
  }
}

}  // namespace
}  // namespace awplan
