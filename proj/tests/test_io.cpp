// Copyright 2026 The Ring Grooming Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace grooming;
using io::json;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("grooming-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Io, SolutionRoundTrip) {
  for (auto r : {construct_c3(13), construct_c2_recursive(10), construct_c1(6)}) {
    json j = io::to_json(r.solution);
    GroomingSolution back = io::solution_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.instance, r.solution.instance);
    EXPECT_EQ(back.blocks, r.solution.blocks);
    EXPECT_EQ(back.provenance, r.solution.provenance);
    EXPECT_EQ(io::to_json(back).dump(), j.dump());
  }
}

TEST(Io, ExplicitOrientationIsStored) {
  auto r = construct_c2_recursive(10);
  json j = io::to_json(r.solution);
  if (r.solution.instance.rule() == HalfArcRule::kExplicit) {
    ASSERT_TRUE(j.contains("orientation"));
    EXPECT_EQ(j["orientation"].size(), 5u);
  }
  json plain = io::to_json(construct_c1(7).solution);
  EXPECT_FALSE(plain.contains("orientation"));
  EXPECT_EQ(plain["half_arc_rule"], "all-forward");
}

TEST(Io, SchemaErrors) {
  json good = io::to_json(construct_c1(5).solution);
  auto broken = [&](auto edit) {
    json j = good;
    edit(j);
    return j;
  };
  EXPECT_THROW(io::solution_from_json(broken([](json& j) { j.erase("n"); })), io::SchemaError);
  EXPECT_THROW(io::solution_from_json(broken([](json& j) { j["c"] = "three"; })), io::SchemaError);
  EXPECT_THROW(io::solution_from_json(broken([](json& j) { j["half_arc_rule"] = "sideways"; })), io::SchemaError);
  EXPECT_THROW(io::solution_from_json(broken([](json& j) { j["adm"] = 1; })), io::SchemaError);
  EXPECT_THROW(io::solution_from_json(broken([](json& j) { j["blocks"][0]["arcs"][0] = json::array({1}); })),
               io::SchemaError);
  EXPECT_THROW(io::solution_from_json(broken([](json& j) { j["blocks"][0]["vertices"] = json::array({0}); })),
               io::SchemaError);
  EXPECT_THROW(io::solution_from_json(json::array()), io::SchemaError);
  json expl = broken([](json& j) {
    j["n"] = 4;
    j["half_arc_rule"] = "explicit";
  });
  EXPECT_THROW(io::solution_from_json(expl), io::SchemaError);
}

TEST(Io, ValidationIsSeparateFromParsing) {
  json j = io::to_json(construct_c1(5).solution);
  // duplicate the first block: parses fine, fails validation
  j["blocks"].push_back(j["blocks"][0]);
  j.erase("adm");
  GroomingSolution s = io::solution_from_json(j);
  Verdict v = validate_solution(s);
  EXPECT_FALSE(v.accepted());
  EXPECT_NE(v.summary().find("("), std::string::npos);
}

TEST(Io, ReadSolutionFile) {
  auto dir = fresh_dir("read");
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "bad.json") << "{ not json";
  }
  EXPECT_THROW(io::read_solution(dir / "bad.json"), io::SchemaError);
  EXPECT_THROW(io::read_solution(dir / "missing.json"), io::SchemaError);
  {
    std::ofstream(dir / "ok.json") << io::to_json(construct_c3(9).solution).dump(1);
  }
  EXPECT_EQ(adm_count(io::read_solution(dir / "ok.json")), construct_c3(9).achieved_adm);
  std::filesystem::remove_all(dir);
}

TEST(Io, DesignRoundTrip) {
  for (const auto& d : {steiner_triple_system(13), gdd3(GroupType::parse("2^6 4^1")), projective_plane(3)}) {
    BlockDesign back = io::design_from_json(io::to_json(d));
    EXPECT_EQ(back.v, d.v);
    EXPECT_EQ(back.groups, d.groups);
    EXPECT_EQ(back.blocks, d.blocks);
    EXPECT_EQ(back.block_size, d.block_size);
    EXPECT_EQ(back.construction, d.construction);
  }
  EXPECT_THROW(io::design_from_json(json{{"points", 3}}), io::SchemaError);
}

TEST(Io, DesignCacheStoresAndReuses) {
  auto dir = fresh_dir("cache");
  io::DesignCache cache(dir);
  auto type = GroupType::parse("3^6 5^1");
  BlockDesign first = cache.gdd3(type);
  auto file = dir / "gdd3-3^6_5^1.json";
  ASSERT_TRUE(std::filesystem::exists(file));
  BlockDesign second = cache.gdd3(type);
  EXPECT_EQ(first.blocks, second.blocks);

  // a corrupted entry is regenerated
  {
    std::ofstream(file) << "{}";
  }
  BlockDesign third = cache.gdd3(type);
  EXPECT_EQ(third.blocks, first.blocks);
  EXPECT_TRUE(validate_design(io::design_from_json(json::parse(std::ifstream(file)))).accepted());

  auto r = construct_c3(33, cache.sources());
  EXPECT_EQ(r.achieved_adm, construct_c3(33).achieved_adm);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
  EXPECT_GE(files, 2u);
  std::filesystem::remove_all(dir);
}

TEST(Io, GammaCsvLayout) {
  auto t = gamma_table({1, 2, 3}, {2, 3, 4});
  std::string csv = io::to_csv(t);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "C,2,3,4,rho");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(io::to_csv(t), csv);
}

TEST(Io, OutcomeAndResultJson) {
  auto r = construct_c3(13);
  json j = io::to_json(r);
  EXPECT_EQ(j["adm"], 39);
  EXPECT_EQ(j["certificate"], "optimal");
  auto o = solve_exact(RingInstance(5, 2));
  json k = io::to_json(o);
  EXPECT_EQ(k["status"], "proved-optimal");
  EXPECT_EQ(k["best_adm"], 8);
}
