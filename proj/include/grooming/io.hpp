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

// JSON and CSV forms of solutions, bounds, designs and tables, plus the
// on-disk design cache. Keys come out sorted (nlohmann::json uses std::map).

#pragma once

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grooming/bounds.hpp"
#include "grooming/constructions.hpp"
#include "grooming/designs.hpp"
#include "grooming/ring.hpp"
#include "grooming/solver.hpp"

namespace grooming::io {

using nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- solutions ----

inline json to_json(const GroomingSolution& s) {
  json blocks = json::array();
  for (const Block& b : s.blocks) {
    json arcs = json::array();
    for (const Arc& a : b.arcs()) arcs.push_back({a.tail, a.head});
    blocks.push_back({{"vertices", b.vertices()}, {"arcs", arcs}});
  }
  json j{{"n", s.instance.n()},
         {"c", s.instance.c()},
         {"half_arc_rule", to_string(s.instance.rule())},
         {"blocks", blocks},
         {"adm", adm_count(s)},
         {"provenance", s.provenance}};
  if (s.instance.rule() == HalfArcRule::kExplicit) {
    json fwd = json::array();
    for (bool f : s.instance.orientation()) fwd.push_back(f);
    j["orientation"] = fwd;
  }
  return j;
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

inline int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

// Reads the solution schema. The stored "adm" must match the blocks and the
// "vertices" lists must match the arcs; admissibility is left to
// validate_solution.
inline GroomingSolution solution_from_json(const json& j) {
  const int n = detail::int_field(j, "n");
  const int c = detail::int_field(j, "c");
  const json& rule_j = detail::field(j, "half_arc_rule");
  if (!rule_j.is_string()) throw SchemaError("field 'half_arc_rule' must be a string");
  HalfArcRule rule;
  try {
    rule = parse_half_arc_rule(rule_j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(e.what());
  }
  std::vector<bool> fwd;
  if (rule == HalfArcRule::kExplicit && n % 2 == 0) {
    const json& o = detail::field(j, "orientation");
    if (!o.is_array()) throw SchemaError("field 'orientation' must be an array of booleans");
    for (const json& x : o) {
      if (!x.is_boolean()) throw SchemaError("field 'orientation' must be an array of booleans");
      fwd.push_back(x.get<bool>());
    }
  }
  RingInstance inst = [&] {
    try {
      return RingInstance(n, c, rule, fwd);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }();
  const json& blocks_j = detail::field(j, "blocks");
  if (!blocks_j.is_array()) throw SchemaError("field 'blocks' must be an array");
  std::vector<Block> blocks;
  for (std::size_t bi = 0; bi < blocks_j.size(); ++bi) {
    const json& b = blocks_j[bi];
    const json& arcs_j = detail::field(b, "arcs");
    if (!arcs_j.is_array()) throw SchemaError("block " + std::to_string(bi) + ": 'arcs' must be an array");
    std::vector<Arc> arcs;
    for (const json& a : arcs_j) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
        throw SchemaError("block " + std::to_string(bi) + ": each arc must be [tail, head]");
      arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    try {
      blocks.emplace_back(std::move(arcs));
    } catch (const std::invalid_argument& e) {
      throw SchemaError("block " + std::to_string(bi) + ": " + e.what());
    }
    if (b.contains("vertices")) {
      std::vector<int> listed;
      try {
        listed = b["vertices"].get<std::vector<int>>();
      } catch (const json::exception&) {
        throw SchemaError("block " + std::to_string(bi) + ": 'vertices' must be integers");
      }
      std::sort(listed.begin(), listed.end());
      if (listed != blocks.back().vertices())
        throw SchemaError("block " + std::to_string(bi) + ": 'vertices' disagrees with its arcs");
    }
  }
  std::string provenance = "external";
  if (j.contains("provenance") && j["provenance"].is_string()) provenance = j["provenance"].get<std::string>();
  GroomingSolution s{inst, std::move(blocks), provenance};
  if (j.contains("adm")) {
    if (!j["adm"].is_number_integer()) throw SchemaError("field 'adm' must be an integer");
    if (j["adm"].get<long>() != adm_count(s))
      throw SchemaError("field 'adm' is " + std::to_string(j["adm"].get<long>()) + " but the blocks use " +
                        std::to_string(adm_count(s)));
  }
  return s;
}

inline GroomingSolution read_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return solution_from_json(j);
}

// ---- bounds ----

inline json to_json(const BoundReport& r) {
  json j{{"name", r.name},
         {"value", to_string(r.value)},
         {"value_float", to_double(r.value)},
         {"ceiling", r.ceiling},
         {"formula", r.formula}};
  if (r.k) j["k"] = *r.k;
  if (r.r) j["r"] = *r.r;
  if (r.alpha) j["alpha"] = *r.alpha;
  return j;
}

inline json to_json(const ChowLinFigure& f) {
  return {{"value", f.value}, {"precision", f.precision}, {"comparison_only", f.comparison_only}};
}

inline json to_json(const RoutingComparison& r) {
  return {{"c", r.c},
          {"n", r.n},
          {"k", r.k},
          {"r", r.r},
          {"rho", to_string(r.rho)},
          {"eta", to_string(r.eta)},
          {"lb_bidirectional", to_string(r.lb_bidirectional)},
          {"lb_unidirectional", to_string(r.lb_unidirectional)},
          {"ratio", to_string(r.ratio)},
          {"ratio_float", to_double(r.ratio)},
          {"ratio_upper", to_string(r.ratio_upper)}};
}

// ---- constructions and solver ----

inline json to_json(const ConstructionResult& r) {
  json j = r.applicable ? to_json(r.solution) : json::object();
  j["construction"] = r.name;
  j["applicable"] = r.applicable;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.applicable) return j;
  j["predicted_adm"] = r.predicted_adm ? json(*r.predicted_adm) : json(nullptr);
  j["predicted_is_upper_bound"] = r.predicted_is_upper_bound;
  j["lower_bound"] = to_json(r.lower_bound);
  j["gap"] = r.gap;
  j["ratio"] = to_string(r.ratio);
  j["certificate"] = to_string(r.certificate);
  return j;
}

inline json to_json(const SolveOutcome& o) {
  json j{{"best_adm", o.best_adm},
         {"status", to_string(o.status)},
         {"nodes_explored", o.nodes_explored},
         {"bound_used", o.bound_used},
         {"bound_name", o.bound_name},
         {"found", o.found}};
  if (o.found) j["solution"] = to_json(o.solution);
  return j;
}

// ---- designs ----

inline json to_json(const BlockDesign& d) {
  return {{"type", d.type().to_string()},
          {"points", d.v},
          {"block_size", d.block_size},
          {"groups", d.groups},
          {"blocks", d.blocks},
          {"construction_name", d.construction}};
}

inline BlockDesign design_from_json(const json& j) {
  BlockDesign d;
  d.v = detail::int_field(j, "points");
  try {
    d.groups = detail::field(j, "groups").get<std::vector<std::vector<Point>>>();
    d.blocks = detail::field(j, "blocks").get<std::vector<std::vector<Point>>>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("design lists must hold integer arrays: ") + e.what());
  }
  if (j.contains("block_size") && j["block_size"].is_number_integer())
    d.block_size = j["block_size"].get<int>();
  else
    d.block_size = d.blocks.empty() ? 0 : static_cast<int>(d.blocks.front().size());
  if (j.contains("construction_name") && j["construction_name"].is_string())
    d.construction = j["construction_name"].get<std::string>();
  return d;
}

// ---- gamma table ----

inline json to_json(const GammaTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.cs.size(); ++i) {
    json cells = json::array();
    for (const GammaCell& cell : t.rows[i])
      cells.push_back({{"p", cell.p}, {"gamma", cell.value}, {"achieves_rho", cell.achieves_rho}});
    rows.push_back({{"c", t.cs[i]}, {"rho", to_string(t.rhos[i])}, {"cells", cells}});
  }
  return {{"c", t.cs}, {"p", t.ps}, {"rows", rows}};
}

// Rows C, columns p, then rho(C). Cells reaching rho get a trailing '*'.
inline std::string to_csv(const GammaTable& t) {
  std::ostringstream out;
  out << "C";
  for (int p : t.ps) out << "," << p;
  out << ",rho\n";
  for (std::size_t i = 0; i < t.cs.size(); ++i) {
    out << t.cs[i];
    for (const GammaCell& cell : t.rows[i]) out << "," << cell.value << (cell.achieves_rho ? "*" : "");
    out << "," << to_string(t.rhos[i]) << "\n";
  }
  return out.str();
}

inline std::string to_text(const GammaTable& t) {
  std::ostringstream out;
  auto pad = [&out](const std::string& s, std::size_t w) { out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s; };
  pad("C\\p", 4);
  for (int p : t.ps) pad(std::to_string(p), 5);
  pad("rho", 7);
  out << "\n";
  for (std::size_t i = 0; i < t.cs.size(); ++i) {
    pad(std::to_string(t.cs[i]), 4);
    for (const GammaCell& cell : t.rows[i]) pad(std::to_string(cell.value) + (cell.achieves_rho ? "*" : " "), 5);
    pad(to_string(t.rhos[i]), 7);
    out << "\n";
  }
  return out.str();
}

// ---- design cache ----

// Designs stored as <dir>/<kind>-<key>.json. Entries are validated on load;
// a bad entry is regenerated and overwritten.
class DesignCache {
 public:
  explicit DesignCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // Directory from GROOMING_DESIGN_CACHE, or none.
  static std::optional<DesignCache> from_environment() {
    const char* dir = std::getenv("GROOMING_DESIGN_CACHE");
    if (!dir || !*dir) return std::nullopt;
    return DesignCache(dir);
  }

  const std::filesystem::path& dir() const { return dir_; }

  BlockDesign gdd3(const GroupType& type) {
    std::string key = type.to_string();
    for (char& ch : key)
      if (ch == ' ') ch = '_';
    return lookup("gdd3-" + key, [&] { return grooming::gdd3(type); });
  }

  BlockDesign bibd(int v, int k) {
    return lookup("bibd-" + std::to_string(v) + "-" + std::to_string(k), [&] { return grooming::bibd(v, k); });
  }

  DesignSources sources() {
    DesignSources s;
    s.gdd3 = [this](const GroupType& t) { return gdd3(t); };
    s.bibd = [this](int v, int k) { return bibd(v, k); };
    return s;
  }

 private:
  template <class Make>
  BlockDesign lookup(const std::string& key, Make make) {
    std::lock_guard<std::mutex> lock(*mu_);
    const auto path = dir_ / (key + ".json");
    if (std::filesystem::exists(path)) {
      try {
        std::ifstream in(path);
        json j;
        in >> j;
        BlockDesign d = design_from_json(j);
        if (validate_design(d)) return d;
      } catch (const std::exception&) {
      }
    }
    BlockDesign d = make();
    std::filesystem::create_directories(dir_);
    const auto tmp = dir_ / (key + ".json.tmp");
    {
      std::ofstream out(tmp);
      out << to_json(d).dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path);
    return d;
  }

  std::filesystem::path dir_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

}  // namespace grooming::io
